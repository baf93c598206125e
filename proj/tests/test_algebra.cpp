#include <gtest/gtest.h>

#include <random>

#include "skein/scalars.hpp"
#include "support.hpp"

using namespace skein;
using testing_support::naive;
using testing_support::naive_add;
using testing_support::naive_mul;
using testing_support::same_fraction;

namespace {

const LaurentPoly A = LaurentPoly::A();
LaurentPoly Ap(int e) { return LaurentPoly::A(e); }

TEST(LaurentPoly, ExpandsProducts) {
  EXPECT_EQ((Ap(2) + 1) * (Ap(-2) + 1), Ap(2) + 2 + Ap(-2));
  EXPECT_EQ((LaurentPoly(1) - Ap(4)) * (LaurentPoly(1) - Ap(8)), LaurentPoly(1) - Ap(4) - Ap(8) + Ap(12));
  const LaurentPoly p = Ap(3) - LaurentPoly::monomial(7, -5);
  EXPECT_EQ(p + LaurentPoly(), p);
}

TEST(LaurentPoly, NeverStoresZeroCoefficients) {
  const LaurentPoly p = (Ap(5) + 1) - Ap(5);
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((p - 1).is_zero());
  EXPECT_EQ((p - 1).terms().size(), 0u);
}

TEST(LaurentPoly, RendersDescending) {
  EXPECT_EQ(delta(2).to_string(), "A^4 + 1 + A^-4");
  EXPECT_EQ((LaurentPoly::monomial(-3, 2) + A).to_string(), "-3*A^2 + A");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, ArbitraryPrecision) {
  LaurentPoly p = 1;
  for (int k = 0; k < 200; ++k) p *= (A + 1);
  // Central binomial coefficient of (1+A)^200 does not fit in 64 bits.
  EXPECT_EQ(p.coefficient(100).get_str(),
            "90548514656103281165404177077484163874504589675413336841320");
  EXPECT_EQ(p.sum_of_coefficients(), Integer(1) << 200);
}

TEST(LaurentPoly, RingAxiomsAgainstSchoolbook) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing_support::random_poly(rng);
    const auto b = testing_support::random_poly(rng);
    const auto c = testing_support::random_poly(rng);
    EXPECT_EQ(naive(a * b), naive_mul(naive(a), naive(b)));
    EXPECT_EQ(naive(a + b), naive_add(naive(a), naive(b)));
    EXPECT_EQ(naive(a - b), naive_add(naive(a), naive(b), -1));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(RationalFn, ReducesToCanonicalForm) {
  const RationalFn r(Ap(4) - Ap(-4), Ap(2) - Ap(-2));
  EXPECT_EQ(r, RationalFn(Ap(2) + Ap(-2)));
  EXPECT_TRUE(r.den().is_one());

  const RationalFn q(delta(2), delta(1));
  EXPECT_EQ(q / RationalFn(1), q);
  EXPECT_EQ(q.den().min_exponent(), 0);
  EXPECT_GT(q.den().leading_coefficient(), 0);
  EXPECT_EQ(q.to_string(), "(-A^6 - A^2 - A^-2) / (A^4 + 1)");
}

TEST(RationalFn, InverseOfLoopValue) {
  const RationalFn d = loop_value();
  EXPECT_EQ(d.inverse() * d, RationalFn(1));
  EXPECT_THROW(RationalFn(1) / RationalFn(), DivisionByZero);
  EXPECT_THROW(RationalFn(A, LaurentPoly()), DivisionByZero);
}

TEST(RationalFn, CanonicalFormIsUniqueUnderCommonFactors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testing_support::random_nonzero_poly(rng);
    const auto b = testing_support::random_nonzero_poly(rng);
    const auto c = testing_support::random_nonzero_poly(rng);
    const RationalFn x(a, b);
    const RationalFn y(c * a, c * b);
    EXPECT_EQ(x.num(), y.num());
    EXPECT_EQ(x.den(), y.den());
    EXPECT_TRUE(same_fraction(x, a, b));
  }
}

TEST(RationalFn, FieldAxioms) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFn x(testing_support::random_nonzero_poly(rng), testing_support::random_nonzero_poly(rng));
    const RationalFn y(testing_support::random_nonzero_poly(rng), testing_support::random_nonzero_poly(rng));
    const RationalFn z(testing_support::random_nonzero_poly(rng), testing_support::random_nonzero_poly(rng));
    EXPECT_EQ(x * x.inverse(), RationalFn(1));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x - y) + y, x);
    EXPECT_EQ((x / y) * y, x);
    // Sum checked by cross multiplication against the unreduced fraction.
    EXPECT_TRUE(same_fraction(x + y, x.num() * y.den() + y.num() * x.den(), x.den() * y.den()));
  }
}

TEST(Scalars, LoopValueAndDelta) {
  EXPECT_EQ(loop_value(), -Ap(2) - Ap(-2));
  EXPECT_EQ(delta(1), loop_value());
  EXPECT_EQ(loop_value().sum_of_coefficients(), Integer(-2));
  EXPECT_EQ(delta(0), LaurentPoly(1));
  EXPECT_EQ(delta(2), Ap(4) + 1 + Ap(-4));
  EXPECT_THROW(delta(-1), IndexOutOfRange);
}

TEST(Scalars, DeltaChebyshevRecurrence) {
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(delta(n + 1), loop_value() * delta(n) - delta(n - 1)) << n;
}

TEST(Scalars, QPochhammer) {
  EXPECT_EQ(q_pochhammer(0), LaurentPoly(1));
  EXPECT_EQ(q_pochhammer(1), LaurentPoly(1) - Ap(4));
  EXPECT_EQ(q_pochhammer(2), (LaurentPoly(1) - Ap(4)) * (LaurentPoly(1) - Ap(8)));
}

TEST(Scalars, CoefficientC) {
  EXPECT_EQ(coeff_C(1, 0), A);
  EXPECT_EQ(coeff_C(1, 1), Ap(-1));
  EXPECT_EQ(coeff_C(2, 1), Ap(2) + Ap(-2));
  EXPECT_EQ(coeff_C(3, 3), Ap(-9));
  EXPECT_THROW(coeff_C(2, 3), IndexOutOfRange);
}

TEST(Scalars, CoefficientCReflection) {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i <= n; ++i) EXPECT_EQ(coeff_C(n, i).mirrored(), coeff_C(n, n - i)) << n << "," << i;
  }
}

TEST(Scalars, CoefficientD) {
  EXPECT_EQ(coeff_D(1, 0), Ap(2));
  EXPECT_EQ(coeff_D(1, 1), LaurentPoly(1) - Ap(-4));
  EXPECT_EQ(coeff_D(2, 0), Ap(8));
}

TEST(Scalars, GaussianBinomialFromPascal) {
  // [n, i] = [n-1, i-1] + q^i [n-1, i] with q = A^4, independent of the quotient.
  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(q_binomial(n, i), q_binomial(n - 1, i - 1) + Ap(4 * i) * q_binomial(n - 1, i));
    }
  }
}

TEST(AsLaurent, Membership) {
  auto ok = as_laurent(RationalFn(delta(2)));
  ASSERT_TRUE(ok);
  EXPECT_EQ(*ok.value, delta(2));

  auto bad = as_laurent(RationalFn(loop_value()).inverse());
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.failure.has_value());
  EXPECT_EQ(bad.failure->denominator, Ap(4) + 1);

  auto q = as_laurent(RationalFn(Ap(4) - Ap(-4), Ap(2) - Ap(-2)));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q.value, Ap(2) + Ap(-2));

  // Rational but non-integral coefficients: 1/2 is not in Z[A, A^-1].
  EXPECT_FALSE(as_laurent(RationalFn(1, 2)));
}

}  // namespace
