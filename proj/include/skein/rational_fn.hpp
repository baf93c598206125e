#pragma once

#include <optional>
#include <string>
#include <utility>

#include "skein/laurent_poly.hpp"

namespace skein {

/// An element num/den of Q(A) in canonical form:
///  - num and den share no nonconstant factor and no common integer factor,
///  - den is an ordinary polynomial with nonzero constant term,
///  - den has a positive leading coefficient.
/// Equal values therefore have identical representations.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT: implicit by design
  RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT: implicit by design
  RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFn inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFn(den_, num_);
  }

  RationalFn mirrored() const { return RationalFn(num_.mirrored(), den_.mirrored()); }

  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return RationalFn(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return RationalFn(a.num_ + b.num_ * a.den_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when the denominator is 1, otherwise "(num) / (den)".
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline void RationalFn::reduce() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  // Move the monomial part of the denominator into the numerator.
  num_ = num_.shifted(-den_.min_exponent());
  den_ = den_.shifted(-den_.min_exponent());
  if (!den_.is_one()) {
    detail::Dense n0 = num_.dense();
    const detail::Dense& d0 = den_.dense();
    detail::Dense g = detail::gcd(n0, d0);
    if (!(g.size() == 1 && g[0] == 1)) {
      const int low = num_.min_exponent();
      num_ = LaurentPoly::from_dense(low, *detail::divide_exact(std::move(n0), g));
      den_ = LaurentPoly::from_dense(0, *detail::divide_exact(d0, g));
    }
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

/// Failure value of as_laurent: the reduced denominator that blocks membership.
struct NotIntegral {
  LaurentPoly denominator;
};

/// Membership test for Z[A, A^-1]. Because RationalFn is canonical, r lies in
/// Z[A, A^-1] exactly when its reduced denominator is 1.
struct LaurentTest {
  std::optional<LaurentPoly> value;
  std::optional<NotIntegral> failure;

  explicit operator bool() const noexcept { return value.has_value(); }
};

inline LaurentTest as_laurent(const RationalFn& r) {
  if (r.den().is_one()) return {r.num(), std::nullopt};
  return {std::nullopt, NotIntegral{r.den()}};
}

}  // namespace skein
