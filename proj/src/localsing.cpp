#include "stringy/localsing.hpp"

#include <numeric>
#include <stdexcept>

namespace stringy {

Singularity Singularity::make(int r, int n, int ell) {
  ABCContext::make(r, n, ell);  // shared validation
  return Singularity{r, n, ell};
}

long Singularity::degree() const { return std::lcm(static_cast<long>(n) + 1, static_cast<long>(ell)); }

std::vector<long> Singularity::weights() const {
  const long d = degree();
  std::vector<long> w;
  w.reserve(static_cast<size_t>(r) + 1);
  w.push_back(d / (n + 1));
  for (int i = 0; i < r; ++i) w.push_back(d / ell);
  return w;
}

FermatSpec FermatSpec::make(int ell, int dim) {
  if (ell < 2 || dim < 0)
    throw std::invalid_argument("Fermat hypersurface requires ell >= 2 and dim >= 0");
  return FermatSpec{ell, dim};
}

TPolynomial poincare_series(const WeightSystem& ws) {
  if (ws.degree <= 0) throw std::invalid_argument("weight system degree must be positive");
  TPolynomial numerator = TPolynomial::constant(1), denominator = TPolynomial::constant(1);
  for (long w : ws.weights) {
    if (w <= 0 || w >= ws.degree)
      throw std::invalid_argument("weights must satisfy 0 < w < degree");
    TPolynomial top = TPolynomial::constant(1);
    top.add_term(-1, ws.degree - w);
    TPolynomial bottom = TPolynomial::constant(1);
    bottom.add_term(-1, w);
    numerator *= top;
    denominator *= bottom;
  }
  auto quotient = TPolynomial::divide_exact(numerator, denominator);
  if (!quotient)
    throw std::domain_error("Poincare series division left a remainder; weight system is not "
                            "the weight system of an isolated quasihomogeneous singularity");
  return *quotient;
}

TPolynomial poincare_series_A(const Singularity& s) {
  const long d = s.degree();
  TPolynomial first = TPolynomial::constant(1);
  for (int j = 1; j <= s.n - 1; ++j) first.add_term(1, j * (d / (s.n + 1)));
  TPolynomial base = TPolynomial::constant(1);
  for (int k = 1; k <= s.ell - 2; ++k) base.add_term(1, k * (d / s.ell));
  return first * base.pow(static_cast<unsigned>(s.r));
}

Integer milnor_number(const Singularity& s) {
  Integer factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(s.ell - 1),
                static_cast<unsigned long>(s.r));
  return Integer(s.n) * factor;
}

Integer graded_dim(const TPolynomial& series, long k) {
  if (k < 0) return 0;
  const Rational c = series.coeff(k);
  if (!c.is_integer() || c.sign() < 0)
    throw std::domain_error("graded dimension must be a nonnegative integer");
  return c.num();
}

Integer link_hodge(const Singularity& s, int p) {
  if (p < 0 || p > s.r - 1) throw std::invalid_argument("link_hodge requires 0 <= p <= r-1");
  const ABCContext ctx = s.context();
  // d(p+1 - 1/(n+1) - r/ell) is an integer since (n+1) | d and ell | d.
  const long arg = ctx.d * (p + 1) - ctx.d / (ctx.n + 1) -
                   static_cast<long>(ctx.r) * (ctx.d / ctx.ell);
  return c_func(ctx, Rational(arg));
}

UVPolynomial e_punctured(const Singularity& s) {
  const int sign = s.r % 2 == 0 ? -1 : 1;  // (-1)^(r-1)
  UVPolynomial bracket;
  for (int p = 0; p <= s.r - 1; ++p) {
    bracket.add_term(1, p, p);
    bracket.add_term(Rational(sign) * Rational(link_hodge(s, p)), p, s.r - 1 - p);
  }
  return UVPolynomial::uv_power_minus_one(1) * bracket;
}

Integer fermat_hodge(const FermatSpec& f, int p, int q) {
  if (p < 0 || q < 0 || p > f.dim || q > f.dim)
    throw std::invalid_argument("fermat_hodge requires 0 <= p, q <= dim");
  if (p + q != f.dim) return p == q ? 1 : 0;
  Integer middle = eulerian_closed(f.dim + 1, p + 1, f.ell - 1, p);
  if (2 * p == f.dim) middle += 1;
  return middle;
}

UVPolynomial fermat_E(const FermatSpec& f) {
  const int sign = f.dim % 2 == 0 ? 1 : -1;  // (-1)^dim
  UVPolynomial result;
  for (int p = 0; p <= f.dim; ++p) {
    result.add_term(1, p, p);
    result.add_term(Rational(sign) * Rational(eulerian_closed(f.dim + 1, p + 1, f.ell - 1, p)),
                    p, f.dim - p);
  }
  return result;
}

Integer fermat_euler(const FermatSpec& f) {
  const int rr = f.dim + 1;
  const Rational e = Rational(1, f.ell) * (Rational(1 - f.ell).pow(static_cast<unsigned long>(rr) + 1) - 1) +
                     Rational(rr + 1);
  if (!e.is_integer()) throw std::logic_error("Fermat Euler number must be an integer");
  return e.num();
}

}  // namespace stringy
