#include "stringy/estr.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace stringy {

int m_of(const Singularity& s) {
  if (s.n % s.ell == 0) return s.n / s.ell + 1;
  if ((s.n + 1) % s.ell == 0) return (s.n + 1) / s.ell;
  throw std::domain_error("ell divides neither n nor n+1");
}

ResolutionModel resolution_model(const Singularity& s) {
  const int m = m_of(s);
  const long c = s.r - s.ell;
  ResolutionModel model{s, m, {}};
  model.divisors.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m - 1; ++i)
    model.divisors.push_back({DivisorKind::P1BundleOverFermat, s.ell, s.r - 1, i * c});
  if (s.n % s.ell == 0)
    model.divisors.push_back(
        {DivisorKind::ProjectiveSpace, 0, s.r - 1, (m - 1) * s.ell * c + s.r - 1});
  else
    model.divisors.push_back({DivisorKind::FermatHypersurface, s.ell, s.r - 1, m * c});
  return model;
}

UVPolynomial divisor_E(const ExceptionalDivisor& d) {
  switch (d.kind) {
    case DivisorKind::FermatHypersurface:
      return fermat_E(FermatSpec::make(d.ell, d.dim));
    case DivisorKind::ProjectiveSpace: {
      UVPolynomial e;
      for (int p = 0; p <= d.dim; ++p) e.add_term(1, p, p);
      return e;
    }
    case DivisorKind::P1BundleOverFermat: {
      UVPolynomial fiber;
      fiber.add_term(1, 0, 0);
      fiber.add_term(1, 1, 1);
      return fermat_E(FermatSpec::make(d.ell, d.dim - 1)) * fiber;
    }
  }
  throw std::logic_error("unreachable divisor kind");
}

UVPolynomial stratum_E(const ResolutionModel& model, std::span<const int> J) {
  if (J.empty()) throw std::invalid_argument("stratum index set must be nonempty");
  for (size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > model.m) throw std::invalid_argument("stratum index out of range");
    if (i > 0 && J[i] <= J[i - 1])
      throw std::invalid_argument("stratum indices must be strictly increasing");
  }
  // In a chain any three divisors, and any non-adjacent pair, have empty
  // intersection.
  if (J.size() >= 3) return {};
  if (J.size() == 2) {
    if (J[1] != J[0] + 1) return {};
    return fermat_E(FermatSpec::make(model.s.ell, model.s.r - 2));
  }

  const int i = J[0];
  if (model.m == 1) return divisor_E(model.divisors[0]);
  const UVPolynomial middle = fermat_E(FermatSpec::make(model.s.ell, model.s.r - 2));
  if (i == 1) return middle * UVPolynomial::uv_power(1);
  if (i < model.m) return middle * UVPolynomial::uv_power_minus_one(1);
  return divisor_E(model.divisors[static_cast<size_t>(model.m) - 1]) - middle;
}

namespace {

// Calls visit(J, E(D_J)) for every stratum with nonempty closure: the
// singletons and the adjacent pairs of the chain.
void for_each_stratum(const ResolutionModel& model,
                      const std::function<void(std::span<const int>, const UVPolynomial&)>& visit) {
  for (int i = 1; i <= model.m; ++i) {
    const int J[] = {i};
    visit(J, stratum_E(model, J));
  }
  for (int i = 1; i <= model.m - 1; ++i) {
    const int J[] = {i, i + 1};
    visit(J, stratum_E(model, J));
  }
}

int to_exponent(long discrepancy) {
  if (discrepancy < 0 || discrepancy >= std::numeric_limits<int>::max())
    throw std::overflow_error("discrepancy exponent exceeds implementation limit");
  return static_cast<int>(discrepancy) + 1;
}

int exponent_of(const ResolutionModel& model, int j) {
  return to_exponent(model.divisors[static_cast<size_t>(j) - 1].discrepancy);
}

}  // namespace

StringyExpression assemble_estr(const Singularity& s) {
  const ResolutionModel model = resolution_model(s);
  StringyExpression expr = StringyExpression::polynomial(e_punctured(s));
  for_each_stratum(model, [&](std::span<const int> J, const UVPolynomial& E) {
    if (E.is_zero()) return;
    UVPolynomial numerator = E;
    std::vector<int> exponents;
    for (int j : J) {
      numerator *= UVPolynomial::uv_power_minus_one(1);
      exponents.push_back(exponent_of(model, j));
    }
    expr.add_term(std::move(numerator), std::move(exponents));
  });
  return expr;
}

StringyExpression closed_estr(const Singularity& s) {
  const int m = m_of(s);
  const long c = s.r - s.ell;
  const UVPolynomial one_minus = UVPolynomial::uv_power_minus_one(1);  // uv - 1
  StringyExpression expr = StringyExpression::polynomial(e_punctured(s));

  if (s.n % s.ell != 0) {
    // ell | n+1: last divisor is the Fermat hypersurface Y_ell^(r-1).
    const UVPolynomial last = fermat_E(FermatSpec::make(s.ell, s.r - 1));
    const int last_exp = to_exponent(m * c);
    if (m >= 2) {
      const UVPolynomial mid = fermat_E(FermatSpec::make(s.ell, s.r - 2));
      const UVPolynomial sq = one_minus * one_minus;
      expr.add_term(mid * UVPolynomial::uv_power(1) * one_minus, {to_exponent(c)});
      for (int i = 2; i <= m - 1; ++i) expr.add_term(mid * sq, {to_exponent(i * c)});
      expr.add_term(-(mid * one_minus), {last_exp});
      for (int i = 1; i <= m - 1; ++i)
        expr.add_term(mid * sq, {to_exponent(i * c), to_exponent((i + 1) * c)});
    }
    expr.add_term(last * one_minus, {last_exp});
    return expr;
  }

  // ell | n: last divisor is P^(r-1) with discrepancy (m-1) ell c + r - 1.
  const int A = to_exponent((m - 1) * s.ell * c + s.r - 1);
  const UVPolynomial mid = fermat_E(FermatSpec::make(s.ell, s.r - 2));
  const UVPolynomial sq = one_minus * one_minus;
  expr.add_term(UVPolynomial::uv_power_minus_one(s.r), {A});  // E(P^{r-1}) (uv-1)
  expr.add_term(mid * UVPolynomial::uv_power(1) * one_minus, {to_exponent(c)});
  for (int i = 2; i <= m - 1; ++i) expr.add_term(mid * sq, {to_exponent(i * c)});
  expr.add_term(-(mid * one_minus), {A});
  for (int i = 1; i <= m - 2; ++i)
    expr.add_term(mid * sq, {to_exponent(i * c), to_exponent((i + 1) * c)});
  expr.add_term(mid * sq, {to_exponent((m - 1) * c), A});
  return expr;
}

Rational estr_euler(const Singularity& s, EulerMethod method) {
  const int m = m_of(s);
  const long c = s.r - s.ell;

  if (method == EulerMethod::Structural) {
    const ResolutionModel model = resolution_model(s);
    Rational total = e_punctured(s).eval_at_one();
    for_each_stratum(model, [&](std::span<const int> J, const UVPolynomial& E) {
      Rational weight = 1;
      for (int j : J) weight /= Rational(exponent_of(model, j));
      total += E.eval_at_one() * weight;
    });
    return total;
  }

  const Rational mid = Rational(fermat_euler(FermatSpec::make(s.ell, s.r - 2)));
  if (s.n % s.ell != 0) {
    const Rational last = Rational(fermat_euler(FermatSpec::make(s.ell, s.r - 1)));
    return Rational(m - 1, m * c + 1) * mid + Rational(1, m * c + 1) * last;
  }
  const long A = (m - 1) * s.ell * c + s.r;
  return Rational(s.r, A) + Rational((m - 1) * s.ell, A) * mid;
}

Rational conjrem_estr(int r, long n) {
  if (r < 2 || n < 1) throw std::invalid_argument("conjrem_estr requires r >= 2 and n >= 1");
  const bool n_odd = n % 2 != 0, r_odd = r % 2 != 0;
  if (n_odd && r_odd) return Rational(n * (r - 1) + r + 3, n * (r - 2) + r);
  if (n_odd) return Rational(static_cast<long>(r) * (n + 1), (r - 2) * (n + 1) + 2);
  if (r_odd) return Rational((r - 1) * n + r, n * (r - 2) + r);
  return Rational(static_cast<long>(r) * (n + 1), n * (r - 2) + r);
}

Integer ind_str(const Rational& e) { return e.den(); }

}  // namespace stringy
