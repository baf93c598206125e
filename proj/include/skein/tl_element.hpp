#pragma once

// Q(A)-linear combinations of crossingless matchings: the Temperley-Lieb
// algebra TL_m in its diagram basis, with the Jones-Wenzl projectors.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "skein/config.hpp"
#include "skein/matching.hpp"
#include "skein/rational_fn.hpp"
#include "skein/scalars.hpp"

namespace skein {

class TLElement {
 public:
  using Terms = std::map<Matching, RationalFn>;

  /// The zero element of TL_width.
  explicit TLElement(int width = 1) : width_(width) {
    if (width < 1) throw IndexOutOfRange("TLElement width must be positive");
  }

  static TLElement basis(const Matching& m, const RationalFn& c = 1) {
    TLElement x(m.width());
    x.add_term(m, c);
    return x;
  }

  static TLElement identity(int m) { return basis(Matching::identity(m)); }
  static TLElement cup_cap(int m, int i) { return basis(Matching::cup_cap(m, i)); }

  int width() const noexcept { return width_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  RationalFn coefficient(const Matching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFn{} : it->second;
  }

  void add_term(const Matching& m, const RationalFn& c) {
    if (m.width() != width_) throw WidthMismatch(width_, m.width());
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TLElement& operator+=(const TLElement& o) {
    if (o.width_ != width_) throw WidthMismatch(width_, o.width_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  TLElement& operator-=(const TLElement& o) {
    if (o.width_ != width_) throw WidthMismatch(width_, o.width_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  TLElement operator-() const {
    TLElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  TLElement scaled(const RationalFn& c) const {
    TLElement r(width_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
    return r;
  }

  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const RationalFn& c, const TLElement& a) { return a.scaled(c); }

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.width_ == b.width_ && a.terms_ == b.terms_;
  }

 private:
  friend class TermBuilder;

  int width_;
  Terms terms_;
};

/// Builds an element from contributions num / den * (loop value)^loops, with
/// denominators drawn from a small shared table. Sums are kept over a common
/// denominator and each output coefficient is reduced once, at the end.
class TermBuilder {
 public:
  explicit TermBuilder(int width) : width_(width) {}

  int denominator_id(const LaurentPoly& den) {
    auto [it, fresh] = den_ids_.try_emplace(den, static_cast<int>(dens_.size()));
    if (fresh) dens_.push_back(den);
    return it->second;
  }

  /// Adds (a * b) / den(id) to the coefficient of m.
  void add_product(const Matching& m, int id, const LaurentPoly& a, const LaurentPoly& b) {
    auto& slots = acc_[m];
    if (slots.size() <= static_cast<std::size_t>(id)) slots.resize(id + 1);
    slots[id].add_product(a, b);
  }

  void add(const Matching& m, int id, const LaurentPoly& a) {
    auto& slots = acc_[m];
    if (slots.size() <= static_cast<std::size_t>(id)) slots.resize(id + 1);
    slots[id] += a;
  }

  TLElement finish() {
    TLElement out(width_);
    if (acc_.empty()) return out;
    // Common denominator of every slot in use.
    LaurentPoly common = 1;
    for (const auto& den : dens_) common = lcm(common, den);
    std::vector<LaurentPoly> scale(dens_.size());
    for (std::size_t k = 0; k < dens_.size(); ++k) {
      scale[k] = divide_or_throw(common, dens_[k], "TermBuilder");
    }
    for (auto& [m, slots] : acc_) {
      LaurentPoly num;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (slots[k].is_zero()) continue;
        if (scale[k].is_one()) {
          num += slots[k];
        } else {
          num.add_product(slots[k], scale[k]);
        }
      }
      if (num.is_zero()) continue;
      out.terms_.emplace_hint(out.terms_.end(), m, RationalFn(std::move(num), common));
    }
    return out;
  }

  /// Sum of all slots as one rational function (used for closures).
  static RationalFn total(const std::vector<LaurentPoly>& dens, const std::vector<LaurentPoly>& nums) {
    LaurentPoly common = 1;
    for (const auto& den : dens) common = lcm(common, den);
    LaurentPoly num;
    for (std::size_t k = 0; k < dens.size(); ++k) {
      if (nums[k].is_zero()) continue;
      num.add_product(nums[k], divide_or_throw(common, dens[k], "closure"));
    }
    return RationalFn(std::move(num), common);
  }

  static LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_one()) return b;
    if (b.is_one() || a == b) return a;
    detail::Dense g = detail::gcd(a.dense(), b.dense());
    LaurentPoly q = LaurentPoly::from_dense(0, *detail::divide_exact(a.dense(), g));
    return q * b;
  }

 private:
  int width_;
  std::map<LaurentPoly, int> den_ids_;
  std::vector<LaurentPoly> dens_;
  std::map<Matching, std::vector<LaurentPoly>> acc_;
};

namespace detail {

/// Powers of the loop value, grown on demand.
class LoopPowers {
 public:
  const LaurentPoly& operator()(int k) {
    while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * loop_value());
    return pows_[k];
  }

 private:
  std::vector<LaurentPoly> pows_{LaurentPoly(1)};
};

}  // namespace detail

/// Bilinear extension of diagram composition; `a` is stacked above `b` and
/// every closed loop contributes the loop value.
inline TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
  TermBuilder builder(a.width());
  if (a.is_zero() || b.is_zero()) return builder.finish();

  // Denominator ids for every pair of operand denominators.
  std::map<LaurentPoly, int> a_ids;
  std::map<LaurentPoly, int> b_ids;
  std::vector<const LaurentPoly*> a_dens;
  std::vector<const LaurentPoly*> b_dens;
  std::vector<int> a_term_den;
  std::vector<int> b_term_den;
  for (const auto& [m, c] : a.terms()) {
    auto [it, fresh] = a_ids.try_emplace(c.den(), static_cast<int>(a_dens.size()));
    if (fresh) a_dens.push_back(&c.den());
    a_term_den.push_back(it->second);
  }
  for (const auto& [m, c] : b.terms()) {
    auto [it, fresh] = b_ids.try_emplace(c.den(), static_cast<int>(b_dens.size()));
    if (fresh) b_dens.push_back(&c.den());
    b_term_den.push_back(it->second);
  }
  std::vector<int> pair_id(a_dens.size() * b_dens.size(), -1);
  auto group = [&](int ia, int ib) {
    int& id = pair_id[ia * b_dens.size() + ib];
    if (id < 0) id = builder.denominator_id(*a_dens[ia] * *b_dens[ib]);
    return id;
  };

  detail::LoopPowers dpow;
  // b's numerators times powers of d, cached per (term, loops).
  std::vector<std::vector<LaurentPoly>> b_scaled(b.size());

  std::size_t ka = 0;
  for (const auto& [ma, ca] : a.terms()) {
    std::size_t kb = 0;
    for (const auto& [mb, cb] : b.terms()) {
      auto [m, loops] = compose(ma, mb);
      auto& cache = b_scaled[kb];
      if (cache.size() <= static_cast<std::size_t>(loops)) cache.resize(loops + 1);
      if (cache[loops].is_zero()) cache[loops] = cb.num() * dpow(loops);
      builder.add_product(m, group(a_term_den[ka], b_term_den[kb]), ca.num(), cache[loops]);
      ++kb;
    }
    ++ka;
  }
  return builder.finish();
}

/// Side-by-side product; widths add and coefficients multiply.
inline TLElement tensor(const TLElement& a, const TLElement& b) {
  TLElement out(a.width() + b.width());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(tensor(ma, mb), ca * cb);
  }
  return out;
}

/// id(offset) (x) a (x) id(total - offset - a.width()).
inline TLElement embed(const TLElement& a, int total, int offset) {
  if (offset < 0 || offset + a.width() > total) {
    throw IndexOutOfRange("embed: width " + std::to_string(a.width()) + " at offset " +
                          std::to_string(offset) + " does not fit in " + std::to_string(total));
  }
  if (a.width() == total) return a;
  TLElement out(total);
  const int right = total - offset - a.width();
  for (const auto& [m, c] : a.terms()) {
    Matching x = m;
    if (offset > 0) x = tensor(Matching::identity(offset), x);
    if (right > 0) x = tensor(x, Matching::identity(right));
    out.add_term(x, c);
  }
  return out;
}

/// Markov closure into Q(A): sum of coefficient * d^(closed loops).
inline RationalFn trace(const TLElement& a) {
  std::map<LaurentPoly, int> ids;
  std::vector<LaurentPoly> dens;
  std::vector<LaurentPoly> nums;
  detail::LoopPowers dpow;
  for (const auto& [m, c] : a.terms()) {
    auto [it, fresh] = ids.try_emplace(c.den(), static_cast<int>(dens.size()));
    if (fresh) {
      dens.push_back(c.den());
      nums.emplace_back();
    }
    nums[it->second].add_product(c.num(), dpow(trace_close(m)));
  }
  return TermBuilder::total(dens, nums);
}

namespace detail {

struct ProjectorCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<const TLElement>> table;
};

inline ProjectorCache& projector_cache() {
  static ProjectorCache cache;
  return cache;
}

}  // namespace detail

/// The Jones-Wenzl projector f^(n) in TL_n, from Wenzl's recursion
///   f^(n) = F - (Delta_{n-2} / Delta_{n-1}) F e_{n-1} F,  F = f^(n-1) (x) id.
/// Results are memoized process-wide; concurrent first calls may both compute
/// the value, and the first insertion wins.
inline const TLElement& jones_wenzl(int n) {
  if (n < 1) throw IndexOutOfRange("jones_wenzl: n must be positive");
  if (n > limits().max_projector) {
    throw BoundExceeded("jones_wenzl: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits().max_projector));
  }
  auto& cache = detail::projector_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return *it->second;
  }
  TLElement value = TLElement::identity(1);
  if (n > 1) {
    const TLElement lifted = tensor(jones_wenzl(n - 1), TLElement::identity(1));
    const RationalFn ratio(delta(n - 2), delta(n - 1));
    value = lifted - ((lifted * TLElement::cup_cap(n, n - 1)) * lifted).scaled(ratio);
  }
  std::lock_guard lock(cache.mutex);
  auto [it, fresh] = cache.table.try_emplace(n, std::make_unique<const TLElement>(std::move(value)));
  return *it->second;
}

}  // namespace skein
