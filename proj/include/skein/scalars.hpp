#pragma once

// Named scalars of the colored skein theory: the loop value, the colored
// unknot values Delta_n, the q-Pochhammer symbol at a = q = A^4, and the
// crossing-expansion coefficients C_{n,i} and D_{n,i}.

#include <string>

#include "skein/laurent_poly.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

/// d = -A^2 - A^-2, the value of a removable trivial circle.
inline LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

inline void require_nonnegative(int n, const char* what) {
  if (n < 0) throw IndexOutOfRange(std::string(what) + ": negative argument " + std::to_string(n));
}

/// Delta_n = (-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2}); the division is exact.
inline LaurentPoly delta(int n) {
  require_nonnegative(n, "delta");
  const LaurentPoly num = LaurentPoly::A(2 * (n + 1)) - LaurentPoly::A(-2 * (n + 1));
  const LaurentPoly den = LaurentPoly::A(2) - LaurentPoly::A(-2);
  LaurentPoly q = divide_or_throw(num, den, "delta");
  return n % 2 == 0 ? q : -q;
}

/// (A^4; A^4)_k = prod_{j=1..k} (1 - A^{4j}).
inline LaurentPoly q_pochhammer(int k) {
  require_nonnegative(k, "q_pochhammer");
  LaurentPoly p = 1;
  for (int j = 1; j <= k; ++j) p *= LaurentPoly(1) - LaurentPoly::A(4 * j);
  return p;
}

inline void require_index(int n, int i, const char* what) {
  if (n < 1 || i < 0 || i > n) {
    throw IndexOutOfRange(std::string(what) + ": need 0 <= i <= n, n >= 1 (got n=" +
                          std::to_string(n) + ", i=" + std::to_string(i) + ")");
  }
}

/// Gaussian binomial in A^4: (A^4;A^4)_n / ((A^4;A^4)_i (A^4;A^4)_{n-i}).
inline LaurentPoly q_binomial(int n, int i) {
  return divide_or_throw(q_pochhammer(n), q_pochhammer(i) * q_pochhammer(n - i), "q_binomial");
}

/// C_{n,i} = A^{n^2 + 2i^2 - 4in} [n choose i]_{A^4}.
inline LaurentPoly coeff_C(int n, int i) {
  require_index(n, i, "coeff_C");
  return q_binomial(n, i).shifted(n * n + 2 * i * i - 4 * i * n);
}

/// D_{n,i} = A^{2i^2 - 4in + 2n^2} [n choose i]_{A^4} prod_{j=n-i+1..n} (1 - A^{-4j}).
inline LaurentPoly coeff_D(int n, int i) {
  require_index(n, i, "coeff_D");
  LaurentPoly tail = 1;
  for (int j = n - i + 1; j <= n; ++j) tail *= LaurentPoly(1) - LaurentPoly::A(-4 * j);
  return (q_binomial(n, i) * tail).shifted(2 * i * i - 4 * i * n + 2 * n * n);
}

/// (-1)^k A^e as a Laurent monomial.
inline LaurentPoly signed_monomial(int k, int e) {
  return LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, e);
}

}  // namespace skein
