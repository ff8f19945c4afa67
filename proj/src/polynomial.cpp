#include "stringy/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stringy {

namespace {

// Shared sum rendering: pieces are (sign, body) with body lacking any sign.
std::string join_signed(const std::vector<std::pair<int, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sign, body] : pieces) {
    if (first) {
      if (sign < 0) os << "-";
      first = false;
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    os << body;
  }
  return os.str();
}

std::string coeff_prefix(const Rational& c) {
  Rational a = abs(c);
  if (a == Rational(1)) return "";
  return a.str() + "*";
}

}  // namespace

UVPolynomial UVPolynomial::monomial(const Rational& c, int p, int q) {
  UVPolynomial r;
  r.add_term(c, p, q);
  return r;
}

UVPolynomial UVPolynomial::uv_power_minus_one(int k) {
  UVPolynomial r = uv_power(k);
  r.add_term(-1, 0, 0);
  return r;
}

Rational UVPolynomial::coeff(int p, int q) const {
  auto it = coeffs_.find(Bidegree{p, q});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void UVPolynomial::add_term(const Rational& c, int p, int q) {
  if (c.is_zero()) return;
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent in UVPolynomial");
  auto [it, inserted] = coeffs_.emplace(Bidegree{p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

UVPolynomial& UVPolynomial::operator+=(const UVPolynomial& o) {
  for (const auto& [b, c] : o.coeffs_) add_term(c, b.p, b.q);
  return *this;
}

UVPolynomial& UVPolynomial::operator-=(const UVPolynomial& o) {
  for (const auto& [b, c] : o.coeffs_) add_term(-c, b.p, b.q);
  return *this;
}

UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b) {
  UVPolynomial r;
  for (const auto& [ba, ca] : a.coeffs_)
    for (const auto& [bb, cb] : b.coeffs_) r.add_term(ca * cb, ba.p + bb.p, ba.q + bb.q);
  return r;
}

UVPolynomial UVPolynomial::operator-() const {
  UVPolynomial r;
  for (const auto& [b, c] : coeffs_) r.coeffs_.emplace(b, -c);
  return r;
}

UVPolynomial operator*(const Rational& c, const UVPolynomial& a) {
  UVPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [b, ca] : a.coeffs_) r.coeffs_.emplace(b, c * ca);
  return r;
}

UVPolynomial UVPolynomial::pow(unsigned e) const {
  UVPolynomial acc = constant(1), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

Rational UVPolynomial::eval(const Rational& u, const Rational& v) const {
  Rational total;
  for (const auto& [b, c] : coeffs_)
    total += c * u.pow(static_cast<unsigned long>(b.p)) * v.pow(static_cast<unsigned long>(b.q));
  return total;
}

Rational UVPolynomial::eval_at_one() const {
  Rational total;
  for (const auto& [b, c] : coeffs_) total += c;
  return total;
}

std::optional<UVPolynomial> UVPolynomial::div_uv_power_minus_one(int k) const {
  if (k < 1) throw std::invalid_argument("div_uv_power_minus_one requires k >= 1");
  UVPolynomial quot, rem = *this;
  // u^p v^q = ((uv)^k - 1) u^(p-k) v^(q-k) + u^(p-k) v^(q-k); each rewrite lowers
  // the total min(p,q) mass by k, so this terminates.
  while (true) {
    auto it = std::find_if(rem.coeffs_.begin(), rem.coeffs_.end(), [k](const auto& kv) {
      return std::min(kv.first.p, kv.first.q) >= k;
    });
    if (it == rem.coeffs_.end()) break;
    Bidegree b = it->first;
    Rational c = it->second;
    quot.add_term(c, b.p - k, b.q - k);
    rem.add_term(-c, b.p, b.q);
    rem.add_term(c, b.p - k, b.q - k);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string UVPolynomial::str() const {
  std::vector<std::pair<int, std::string>> pieces;
  std::vector<std::pair<Bidegree, Rational>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.p + a.first.q, tb = b.first.p + b.first.q;
    if (ta != tb) return ta > tb;
    return a.first.p > b.first.p;
  });
  for (const auto& [b, c] : terms) {
    std::string body;
    if (b.p == 0 && b.q == 0) {
      body = abs(c).str();
    } else {
      body = coeff_prefix(c);
      if (b.p > 0) body += b.p == 1 ? "u" : "u^" + std::to_string(b.p);
      if (b.p > 0 && b.q > 0) body += "*";
      if (b.q > 0) body += b.q == 1 ? "v" : "v^" + std::to_string(b.q);
    }
    pieces.emplace_back(c.sign(), body);
  }
  return join_signed(pieces);
}

TPolynomial TPolynomial::monomial(const Rational& c, long k) {
  TPolynomial r;
  r.add_term(c, k);
  return r;
}

long TPolynomial::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Rational TPolynomial::coeff(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TPolynomial::add_term(const Rational& c, long k) {
  if (c.is_zero()) return;
  if (k < 0) throw std::invalid_argument("negative exponent in TPolynomial");
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(c, k);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(-c, k);
  return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) r.add_term(ca * cb, ka + kb);
  return r;
}

TPolynomial TPolynomial::pow(unsigned e) const {
  TPolynomial acc = constant(1), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

Rational TPolynomial::eval(const Rational& t) const {
  Rational total;
  for (const auto& [k, c] : coeffs_) total += c * t.pow(static_cast<unsigned long>(k));
  return total;
}

Rational TPolynomial::eval_at_one() const {
  Rational total;
  for (const auto& [k, c] : coeffs_) total += c;
  return total;
}

std::optional<TPolynomial> TPolynomial::divide_exact(const TPolynomial& num,
                                                     const TPolynomial& den) {
  if (den.is_zero()) return std::nullopt;
  TPolynomial quot, rem = num;
  const long dd = den.degree();
  const Rational dl = den.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long k = rem.degree() - dd;
    const Rational c = rem.coeff(rem.degree()) / dl;
    quot.add_term(c, k);
    rem -= TPolynomial::monomial(c, k) * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string TPolynomial::str() const {
  std::vector<std::pair<int, std::string>> pieces;
  for (const auto& [k, c] : coeffs_) {
    std::string body;
    if (k == 0) {
      body = abs(c).str();
    } else {
      body = coeff_prefix(c);
      body += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    pieces.emplace_back(c.sign(), body);
  }
  return join_signed(pieces);
}

}  // namespace stringy
