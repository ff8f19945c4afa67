#pragma once

#include "stringy/combinat.hpp"
#include "stringy/polynomial.hpp"

#include <vector>

namespace stringy {

// The r-dimensional hypersurface singularity
//   x_1^{n+1} + x_2^ell + ... + x_{r+1}^ell = 0
// at the origin of C^{r+1}. Quasihomogeneous of degree d = lcm(n+1, ell)
// with weights (d/(n+1), d/ell, ..., d/ell).
struct Singularity {
  int r = 0;
  int n = 0;
  int ell = 0;

  // Requires r >= ell >= 2 and n + 1 >= ell.
  static Singularity make(int r, int n, int ell);

  long degree() const;
  std::vector<long> weights() const;
  ABCContext context() const { return ABCContext::make(r, n, ell); }
};

struct WeightSystem {
  long degree = 0;
  std::vector<long> weights;
};

// Fermat hypersurface of the given degree and dimension,
// x_1^ell + ... + x_{dim+2}^ell = 0 in P^{dim+1}.
struct FermatSpec {
  int ell = 0;
  int dim = 0;

  static FermatSpec make(int ell, int dim);
};

// Poincare series of the graded Milnor algebra of a quasihomogeneous
// polynomial with the given weight system, by exact long division of
// prod_i (1 - t^{d - w_i}) by prod_i (1 - t^{w_i}). A nonzero remainder
// means the weight system is inconsistent and raises an error.
TPolynomial poincare_series(const WeightSystem& ws);

// The same series for a Singularity by the closed product
// (1 + sum_{j=1}^{n-1} t^{j d/(n+1)}) * (1 + sum_{k=1}^{ell-2} t^{k d/ell})^r.
TPolynomial poincare_series_A(const Singularity& s);

// Milnor number n * (ell - 1)^r.
Integer milnor_number(const Singularity& s);

// Coefficient of t^k, checked to be a nonnegative integer.
Integer graded_dim(const TPolynomial& series, long k);

// Hodge number h^{p, r-1-p} of the middle cohomology of the singularity
// link, c(d(p+1 - 1/(n+1) - r/ell)). Requires 0 <= p <= r-1.
Integer link_hodge(const Singularity& s, int p);

// E-polynomial of the punctured hypersurface X \ {0}:
// (uv - 1) * sum_{p=0}^{r-1} ((uv)^p + (-1)^{r-1} h^{p,r-1-p} u^p v^{r-1-p}).
// Its value at u = v = 1 is always 0.
UVPolynomial e_punctured(const Singularity& s);

// Hodge number h^{p,q} of the Fermat hypersurface: away from the middle
// dimension delta_{p,q}; for p + q = dim it is
// S(dim+1, p+1 | ell-1, p) + delta_{2p,dim}.
Integer fermat_hodge(const FermatSpec& f, int p, int q);

// E-polynomial sum_{p=0}^{dim} u^p (v^p + (-1)^dim S(dim+1, p+1 | ell-1, p)
// v^{dim-p}).
UVPolynomial fermat_E(const FermatSpec& f);

// Euler number (1/ell)((1-ell)^{dim+2} - 1) + dim + 2.
Integer fermat_euler(const FermatSpec& f);

}  // namespace stringy
