#include "stringy/expression.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stringy {

StringyExpression StringyExpression::polynomial(UVPolynomial p) {
  StringyExpression e;
  e.add_term(std::move(p), {});
  return e;
}

void StringyExpression::add_term(UVPolynomial numerator, std::vector<int> denominator_exponents) {
  for (int k : denominator_exponents)
    if (k < 1) throw std::invalid_argument("denominator exponent must be >= 1");
  std::sort(denominator_exponents.begin(), denominator_exponents.end());
  terms_.push_back({std::move(numerator), std::move(denominator_exponents)});
}

StringyExpression& StringyExpression::operator+=(const StringyExpression& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Rational StringyExpression::eval(const Rational& u0, const Rational& v0) const {
  const Rational t0 = u0 * v0;
  Rational total;
  for (const auto& term : terms_) {
    Rational den = 1;
    for (int k : term.denominator_exponents) {
      Rational factor = t0.pow(static_cast<unsigned long>(k)) - 1;
      if (factor.is_zero()) throw PoleError(k);
      den *= factor;
    }
    total += term.numerator.eval(u0, v0) / den;
  }
  return total;
}

Rational StringyExpression::limit_at_one() const {
  Rational total;
  for (const auto& term : terms_) {
    UVPolynomial residual = term.numerator;
    Rational weight = 1;
    for (int k : term.denominator_exponents) {
      auto quotient = residual.div_uv_power_minus_one(1);
      if (!quotient)
        throw std::domain_error(
            "limit_at_one: term numerator lacks a factor u*v - 1 per denominator factor; "
            "not an assembled stringy expression");
      residual = std::move(*quotient);
      weight /= Rational(k);
    }
    total += residual.eval_at_one() * weight;
  }
  return total;
}

namespace {

std::map<int, int> exponent_multiplicities(const std::vector<int>& exponents) {
  std::map<int, int> m;
  for (int k : exponents) ++m[k];
  return m;
}

void merge_max(std::map<int, int>& into, const std::map<int, int>& from) {
  for (const auto& [k, count] : from) {
    auto [it, inserted] = into.emplace(k, count);
    if (!inserted) it->second = std::max(it->second, count);
  }
}

// Numerator of the term after multiplying up to the common denominator.
UVPolynomial cleared_numerator(const ExpressionTerm& term, const std::map<int, int>& common) {
  UVPolynomial result = term.numerator;
  auto own = exponent_multiplicities(term.denominator_exponents);
  for (const auto& [k, count] : common) {
    int missing = count - (own.count(k) ? own[k] : 0);
    for (int i = 0; i < missing; ++i) result *= UVPolynomial::uv_power_minus_one(k);
  }
  return result;
}

}  // namespace

bool StringyExpression::equals(const StringyExpression& o) const {
  std::map<int, int> common;
  for (const auto& term : terms_) merge_max(common, exponent_multiplicities(term.denominator_exponents));
  for (const auto& term : o.terms_) merge_max(common, exponent_multiplicities(term.denominator_exponents));
  UVPolynomial diff;
  for (const auto& term : terms_) diff += cleared_numerator(term, common);
  for (const auto& term : o.terms_) diff -= cleared_numerator(term, common);
  return diff.is_zero();
}

std::optional<UVPolynomial> StringyExpression::as_polynomial() const {
  std::map<int, int> common;
  for (const auto& term : terms_) merge_max(common, exponent_multiplicities(term.denominator_exponents));
  UVPolynomial numerator;
  for (const auto& term : terms_) numerator += cleared_numerator(term, common);
  for (const auto& [k, count] : common) {
    for (int i = 0; i < count; ++i) {
      auto quotient = numerator.div_uv_power_minus_one(k);
      if (!quotient) return std::nullopt;
      numerator = std::move(*quotient);
    }
  }
  return numerator;
}

std::string StringyExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << term.numerator.str() << ")";
    if (!term.denominator_exponents.empty()) {
      std::string joined;
      for (int k : term.denominator_exponents) {
        if (!joined.empty()) joined += "*";
        if (k == 1)
          joined += "(u*v - 1)";
        else
          joined += "((u*v)^" + std::to_string(k) + " - 1)";
      }
      if (term.denominator_exponents.size() == 1)
        os << "/" << joined;
      else
        os << "/(" << joined << ")";
    }
  }
  return os.str();
}

}  // namespace stringy
