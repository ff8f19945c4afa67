#pragma once

#include "stringy/rational.hpp"

#include <span>
#include <vector>

namespace stringy {

// C(m, k); zero outside 0 <= k <= m.
Integer binomial(long m, long k);

// r! / (parts[0]! * ... * parts.back()!). The parts must be nonnegative and
// sum to r.
Integer multinomial(int r, std::span<const int> parts);

// Parameters (r, n, ell) of the hypersurface singularity
// x_1^{n+1} + x_2^ell + ... + x_{r+1}^ell = 0, together with the
// quasihomogeneity degree d = lcm(n+1, ell).
struct ABCContext {
  int r = 0;
  int n = 0;
  int ell = 0;
  long d = 0;

  // Requires r >= ell >= 2 and n + 1 >= ell.
  static ABCContext make(int r, int n, int ell);
};

// Indicator of i in {p * d/(n+1) : 0 <= p <= n-1}; zero for all other i.
int a_func(const ABCContext& ctx, long i);

// Number of monomials of weighted degree j in the ell-power coordinates:
// the coefficient of t^j in (1 + t^{d/ell} + ... + t^{(ell-2) d/ell})^r,
// computed as a sum of multinomials. For ell = 2 this is 1 at j = 0 and 0
// elsewhere.
Integer b_func(const ABCContext& ctx, long j);

// Convolution c(k) = sum_{i+j=k} a(i) b(j); zero off the nonnegative integers.
Integer c_func(const ABCContext& ctx, const Rational& k);

// Non-central Eulerian number S(kappa, lambda | nu, xi): the coefficients of
// the development C(nu*t + xi, kappa) = sum_lambda S(kappa, lambda | nu, xi)
// * C(t + kappa - lambda, kappa). Row kappa+1 follows from row kappa via
//   (kappa+1) S(kappa+1, lambda)
//     = (nu*lambda - kappa + xi) S(kappa, lambda)
//     + (nu*(kappa - lambda + 2) + kappa - xi) S(kappa, lambda - 1),
// seeded by S(0,0) = 1 and S(kappa, 0) = C(xi, kappa). Intermediate values
// are exact rationals; the result is an integer for integer inputs.
Rational eulerian_recurrence(int kappa, int lambda, int nu, int xi);

// Same numbers by the closed sum
// S(kappa, lambda | nu, xi)
//   = sum_{j=0}^{lambda} (-1)^j C(kappa+1, j) C(nu*(lambda-j) + xi, kappa).
Integer eulerian_closed(int kappa, int lambda, int nu, int xi);

}  // namespace stringy
