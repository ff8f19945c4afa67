#pragma once

#include "stringy/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stringy {

// Bidegree of a monomial u^p * v^q.
struct Bidegree {
  int p = 0;
  int q = 0;
  auto operator<=>(const Bidegree&) const = default;
};

// Polynomial in Z[u,v] with exact rational coefficients, sparse representation.
// Zero coefficients are never stored.
class UVPolynomial {
public:
  UVPolynomial() = default;

  static UVPolynomial constant(const Rational& c) { return monomial(c, 0, 0); }
  static UVPolynomial monomial(const Rational& c, int p, int q);
  // (uv)^k
  static UVPolynomial uv_power(int k) { return monomial(1, k, k); }
  // (uv)^k - 1
  static UVPolynomial uv_power_minus_one(int k);

  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int p, int q) const;
  const std::map<Bidegree, Rational>& coeffs() const { return coeffs_; }

  void add_term(const Rational& c, int p, int q);

  UVPolynomial& operator+=(const UVPolynomial& o);
  UVPolynomial& operator-=(const UVPolynomial& o);
  friend UVPolynomial operator+(UVPolynomial a, const UVPolynomial& b) { return a += b; }
  friend UVPolynomial operator-(UVPolynomial a, const UVPolynomial& b) { return a -= b; }
  friend UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b);
  UVPolynomial& operator*=(const UVPolynomial& o) { return *this = *this * o; }
  UVPolynomial operator-() const;
  friend UVPolynomial operator*(const Rational& c, const UVPolynomial& a);

  friend bool operator==(const UVPolynomial& a, const UVPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  UVPolynomial pow(unsigned e) const;

  Rational eval(const Rational& u, const Rational& v) const;
  // Value at u = v = 1, i.e. the sum of all coefficients.
  Rational eval_at_one() const;

  // Exact division by (uv)^k - 1; nullopt when the division leaves a remainder.
  std::optional<UVPolynomial> div_uv_power_minus_one(int k) const;

  // Canonical rendering: terms sorted by (p+q, p) descending, "c*u^p*v^q" with
  // unit coefficients and exponents elided, e.g. "u^3*v^3 + 7*u^2*v^2 + u*v".
  std::string str() const;

private:
  std::map<Bidegree, Rational> coeffs_;
};

// Polynomial in Z[t] with exact rational coefficients, sparse representation.
class TPolynomial {
public:
  TPolynomial() = default;

  static TPolynomial constant(const Rational& c) { return monomial(c, 0); }
  static TPolynomial monomial(const Rational& c, long k);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const;  // degree of the zero polynomial is -1
  Rational coeff(long k) const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  void add_term(const Rational& c, long k);

  TPolynomial& operator+=(const TPolynomial& o);
  TPolynomial& operator-=(const TPolynomial& o);
  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
  TPolynomial& operator*=(const TPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const TPolynomial& a, const TPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  TPolynomial pow(unsigned e) const;

  Rational eval(const Rational& t) const;
  Rational eval_at_one() const;

  // Exact quotient; nullopt when the division leaves a remainder or den == 0.
  static std::optional<TPolynomial> divide_exact(const TPolynomial& num, const TPolynomial& den);

  // Ascending powers: "1 + 4*t + 6*t^2 + 4*t^3 + t^4".
  std::string str() const;

private:
  std::map<long, Rational> coeffs_;
};

}  // namespace stringy
