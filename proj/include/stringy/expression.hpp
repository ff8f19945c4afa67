#pragma once

#include "stringy/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringy {

// Evaluation hit a vanishing denominator factor (uv)^k - 1.
class PoleError : public std::domain_error {
public:
  explicit PoleError(int factor_exponent)
      : std::domain_error("pole: denominator factor (u*v)^" +
                          std::to_string(factor_exponent) + " - 1 vanishes"),
        factor_exponent_(factor_exponent) {}
  int factor_exponent() const { return factor_exponent_; }

private:
  int factor_exponent_;
};

// One summand numerator / prod_k ((uv)^k - 1). The exponent multiset is kept
// sorted; an empty multiset means the summand is the plain polynomial.
struct ExpressionTerm {
  UVPolynomial numerator;
  std::vector<int> denominator_exponents;
};

// Finite sum of rational functions of the shape produced when stringy
// E-functions are assembled from strata: each term is a polynomial over a
// product of factors (uv)^k - 1. No simplification happens on construction;
// equality is decided exactly by clearing denominators.
class StringyExpression {
public:
  StringyExpression() = default;

  static StringyExpression polynomial(UVPolynomial p);

  // denominator_exponents must all be >= 1.
  void add_term(UVPolynomial numerator, std::vector<int> denominator_exponents);

  const std::vector<ExpressionTerm>& terms() const { return terms_; }

  StringyExpression& operator+=(const StringyExpression& o);
  friend StringyExpression operator+(StringyExpression a, const StringyExpression& b) {
    return a += b;
  }

  // Exact evaluation; throws PoleError when (u0*v0)^k = 1 for some factor.
  Rational eval(const Rational& u0, const Rational& v0) const;

  // Limit for u,v -> 1. Each term must carry one factor (uv - 1) in its
  // numerator per denominator factor; the limit is then
  // sum_i R_i(1,1) * prod_j 1/k_ij with R_i the residual after dividing the
  // numerator by (uv - 1) once per factor. Terms produced by the assembly and
  // closed-form paths are always of this shape.
  Rational limit_at_one() const;

  // Exact equality as rational functions: both sides are brought over the
  // common denominator prod (t^k - 1) (per-exponent maximum multiplicity over
  // all terms) and the numerators compared.
  bool equals(const StringyExpression& o) const;

  // The expression as a plain polynomial, when it is one.
  std::optional<UVPolynomial> as_polynomial() const;

  // Sum of terms "(numerator)/(((u*v)^k - 1)*...)".
  std::string str() const;

private:
  std::vector<ExpressionTerm> terms_;
};

}  // namespace stringy
