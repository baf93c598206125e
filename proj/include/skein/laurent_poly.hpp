#pragma once

// Exact Laurent polynomials in one variable A with arbitrary-precision
// integer coefficients, plus the dense polynomial kernels (pseudo-remainder,
// exact division, primitive gcd) that the rational-function layer relies on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

using Integer = mpz_class;

namespace detail {

/// Dense ordinary polynomial, index = degree. Canonical: no trailing zeros.
using Dense = std::vector<Integer>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

inline Integer content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_by_integer(Dense& p, const Integer& c) {
  if (c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

inline Dense primitive_part(Dense p) {
  trim(p);
  if (p.empty()) return p;
  Integer c = content(p);
  if (p.back() < 0) c = -c;
  divide_by_integer(p, c);
  return p;
}

/// lc(b)^k * a mod b for the smallest k that keeps everything integral.
inline Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  trim(a);
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    Integer la = a.back();
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) {
      mpz_submul(a[i + shift].get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Quotient of a by b in Z[x] when b divides a exactly; nullopt otherwise.
inline std::optional<Dense> divide_exact(Dense a, const Dense& b) {
  trim(a);
  if (b.empty()) throw DivisionByZero();
  if (a.empty()) return Dense{};
  const int db = degree(b);
  if (degree(a) < db) return std::nullopt;
  Dense q(degree(a) - db + 1);
  const Integer& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) {
      mpz_submul(a[i + shift].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    }
    q[shift] = std::move(t);
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

inline int exponent_stride(const Dense& p, int g) {
  for (int i = 1; i < static_cast<int>(p.size()) && g != 1; ++i) {
    if (p[i] != 0) g = std::gcd(g, i);
  }
  return g;
}

inline Dense compress(const Dense& p, int stride) {
  Dense out((p.size() - 1) / stride + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i * stride];
  return out;
}

inline Dense expand(const Dense& p, int stride) {
  Dense out((p.size() - 1) * stride + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * stride] = p[i];
  return out;
}

inline Dense gcd_primitive_prs(Dense a, Dense b) {
  Integer c = gcd(content(a), content(b));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return Dense{c};
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  for (auto& x : a) x *= c;
  return a;
}

/// gcd over Z[x] (content included), leading coefficient positive.
/// Both inputs must be nonzero.
inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  if (a.size() == 1 || b.size() == 1) return Dense{gcd(content(a), content(b))};
  // Polynomials in x^g share a gcd that is itself a polynomial in x^g.
  const int stride = exponent_stride(b, exponent_stride(a, 0));
  if (stride > 1) {
    return expand(gcd_primitive_prs(compress(a, stride), compress(b, stride)), stride);
  }
  return gcd_primitive_prs(std::move(a), std::move(b));
}

}  // namespace detail

/// An element of Z[A, A^-1]. Stored densely between the lowest and highest
/// nonzero exponent; the zero polynomial has no stored coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}  // NOLINT: implicit by design
  explicit LaurentPoly(const Integer& constant) {
    if (constant != 0) coeffs_.push_back(constant);
  }

  static LaurentPoly monomial(const Integer& coefficient, int exponent) {
    LaurentPoly p(coefficient);
    p.low_ = p.is_zero() ? 0 : exponent;
    return p;
  }

  /// A^exponent.
  static LaurentPoly A(int exponent = 1) { return monomial(1, exponent); }

  static LaurentPoly from_dense(int low, detail::Dense coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  /// Duplicate exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(int exponent) const {
    const int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
  }

  const Integer& leading_coefficient() const { return coeffs_.back(); }
  const Integer& trailing_coefficient() const { return coeffs_.front(); }

  /// Coefficients from min_exponent() upward; interior entries may be zero.
  const detail::Dense& dense() const noexcept { return coeffs_; }

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) f(low_ + static_cast<int>(k), coeffs_[k]);
    }
  }

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Integer>> terms() const {
    std::vector<std::pair<int, Integer>> out;
    for_each_term([&](int e, const Integer& c) { out.emplace_back(e, c); });
    return out;
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const { return detail::content(coeffs_); }

  /// Multiplication by A^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  /// The image under A -> A^-1.
  LaurentPoly mirrored() const {
    if (is_zero()) return {};
    LaurentPoly p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -max_exponent();
    return p;
  }

  /// Value at A = 1.
  Integer sum_of_coefficients() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result = 1;
    LaurentPoly base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  LaurentPoly& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
      low_ = 0;
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  /// this += a * b, without materializing the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const int lo = a.low_ + b.low_;
    const int hi = a.max_exponent() + b.max_exponent();
    reserve_range(lo, hi);
    const int base = lo - low_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        mpz_addmul(coeffs_[base + i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
      }
    }
    normalize();
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    p.add_product(a, b);
    return p;
  }

  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Total order (lowest exponent, then coefficients); only for use as a key.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    if (a.low_ != b.low_) return a.low_ < b.low_;
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                        b.coeffs_.end());
  }

  /// Descending exponents, e.g. "A^4 + 1 + A^-4" or "-3*A^2 + A".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      const int e = low_ + k;
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      Integer mag = abs(c);
      if (e == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    reserve_range(o.low_, o.max_exponent());
    const int base = o.low_ - low_;
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      if (subtract) {
        coeffs_[base + k] -= o.coeffs_[k];
      } else {
        coeffs_[base + k] += o.coeffs_[k];
      }
    }
    normalize();
    return *this;
  }

  // Grow storage so that [lo, hi] is addressable.
  void reserve_range(int lo, int hi) {
    if (coeffs_.empty()) {
      low_ = lo;
      coeffs_.assign(hi - lo + 1, Integer(0));
      return;
    }
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), low_ - lo, Integer(0));
      low_ = lo;
    }
    if (hi > max_exponent()) coeffs_.resize(hi - low_ + 1, Integer(0));
  }

  void normalize() {
    detail::trim(coeffs_);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  detail::Dense coeffs_;
};

/// Quotient q with num = q * den in Z[A, A^-1], or nullopt when den does not
/// divide num there.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return LaurentPoly{};
  auto q = detail::divide_exact(num.dense(), den.dense());
  if (!q) return std::nullopt;
  return LaurentPoly::from_dense(num.min_exponent() - den.min_exponent(), std::move(*q));
}

/// Like divide_exact, but a remainder is reported as InexactDivision.
inline LaurentPoly divide_or_throw(const LaurentPoly& num, const LaurentPoly& den,
                                   const char* context) {
  auto q = divide_exact(num, den);
  if (!q) {
    throw InexactDivision(std::string(context) + ": (" + num.to_string() + ") / (" +
                          den.to_string() + ") is not exact");
  }
  return *std::move(q);
}

}  // namespace skein
