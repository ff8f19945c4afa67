#include "stringy/rational.hpp"

#include <ostream>

namespace stringy {

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
}

Rational Rational::pow(unsigned long e) const {
  Rational base = *this, acc = 1;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace stringy
