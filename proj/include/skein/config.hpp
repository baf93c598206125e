#pragma once

#include <cstdlib>
#include <string>

namespace skein {

/// Size bounds for the expensive constructions. Bounds are configuration:
/// adjust them before starting concurrent work.
struct Limits {
  int max_basis_width = 8;   // enumerate_basis
  int max_projector = 8;     // jones_wenzl
  int max_cable_color = 4;   // cabled_crossing, singular_vertex
  int max_total_width = 12;  // rho_hat, evaluate

  /// Defaults overridden by SKEIN_MAX_CABLE_COLOR, SKEIN_MAX_TOTAL_WIDTH and
  /// SKEIN_MAX_PROJECTOR when those are set to positive integers.
  static Limits from_environment() {
    Limits l;
    read_env("SKEIN_MAX_CABLE_COLOR", l.max_cable_color);
    read_env("SKEIN_MAX_TOTAL_WIDTH", l.max_total_width);
    read_env("SKEIN_MAX_PROJECTOR", l.max_projector);
    return l;
  }

 private:
  static void read_env(const char* name, int& slot) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return;
    try {
      const int v = std::stoi(raw);
      if (v > 0) slot = v;
    } catch (const std::exception&) {
      // unparsable override: keep the default
    }
  }
};

inline Limits& limits() {
  static Limits l = Limits::from_environment();
  return l;
}

}  // namespace skein
