#include "stringy/global.hpp"

#include <stdexcept>

namespace stringy {

namespace {

Integer int_pow(long base, unsigned long exp) {
  Integer b(base), acc = 1;
  while (exp) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

Integer euler_smooth_ci(int N, std::span<const long> degrees) {
  const int r = N - static_cast<int>(degrees.size());
  if (degrees.empty() || r < 1)
    throw std::invalid_argument("complete intersection requires 1 <= #degrees <= N - 1");
  for (long d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");

  // h[v] = complete homogeneous symmetric function of the degrees.
  std::vector<Integer> h(static_cast<size_t>(r) + 1);
  h[0] = 1;
  for (long d : degrees)
    for (int v = 1; v <= r; ++v) h[static_cast<size_t>(v)] += Integer(d) * h[static_cast<size_t>(v) - 1];

  Integer bracket = 0;
  for (int v = 0; v <= r; ++v) {
    const Integer term = binomial(N + 1, r - v) * h[static_cast<size_t>(v)];
    if (v % 2 == 0)
      bracket += term;
    else
      bracket -= term;
  }
  Integer product = 1;
  for (long d : degrees) product *= d;
  return bracket * product;
}

Rational estr_ci(const CompleteIntersectionSpec& spec) {
  Rational total = Rational(euler_smooth_ci(spec.N, spec.degrees));
  const int r = spec.dim();
  const int sign = r % 2 == 0 ? -1 : 1;  // (-1)^(r+1)
  for (const auto& [s, count] : spec.singularities) {
    if (count < 0) throw std::invalid_argument("singularity count must be nonnegative");
    if (s.r != r)
      throw std::invalid_argument(
          "singularity dimension must equal the complete intersection dimension");
    const Rational local = estr_euler(s, EulerMethod::Closed) +
                           Rational(sign) * Rational(milnor_number(s)) - 1;
    total += Rational(Integer(count)) * local;
  }
  return total;
}

StringyExpression estr_global(const UVPolynomial& e_smooth,
                              std::span<const StringyExpression> locals) {
  StringyExpression expr = StringyExpression::polynomial(e_smooth);
  for (const auto& local : locals) {
    expr += local;
    expr.add_term(UVPolynomial::constant(-1), {});
  }
  return expr;
}

Rational goryunov_estr(int N, int kappa) {
  if (N < 3 || kappa < 0 || kappa > N)
    throw std::invalid_argument("goryunov_estr requires N >= 3 and 0 <= kappa <= N");
  const Rational smooth =
      Rational(1, 4) * Rational(int_pow(-3, static_cast<unsigned long>(N) + 1) - 1) +
      Rational(N + 1);
  const int sN = N % 2 == 0 ? 1 : -1;  // (-1)^N
  const Rational per_node =
      Rational(1, N - 2) * (Rational(1, 2) * Rational(sN - 1) + Rational(N)) + Rational(sN - 1);
  return smooth + Rational(goryunov_node_count(N, kappa)) * per_node;
}

Integer goryunov_node_count(int N, int kappa) {
  if (N < 3 || kappa < 0 || kappa > N)
    throw std::invalid_argument("goryunov_node_count requires N >= 3 and 0 <= kappa <= N");
  return int_pow(2, static_cast<unsigned long>(kappa)) * binomial(N + 1, kappa + 1);
}

Rational segre_knorrer_estr(long n) {
  if (n < 4) throw std::invalid_argument("segre_knorrer_estr requires n >= 4");
  if (n % 2 != 0)
    return Rational(n - 1) + Rational((n - 1) * (n - 1), n * n - 3 * n - 2);
  return Rational(n - 1) + Rational((n - 2) * (n + 1), n * (n - 4) + (n - 2));
}

ArrangementSpec ArrangementSpec::make(int N, int r, int d, long t_top) {
  if (r < 2 || N <= r)
    throw std::invalid_argument("arrangement requires N > r >= 2");
  if (d < 2 || d > r) throw std::invalid_argument("arrangement requires 2 <= d <= r");
  if (t_top < 0) throw std::invalid_argument("point count t_top must be nonnegative");
  return ArrangementSpec{N, r, d, t_top};
}

Rational arrangement_estr(const ArrangementSpec& spec) {
  const int N = spec.N, r = spec.r, d = spec.d;
  Integer bracket = 0;
  for (int v = 0; v <= r; ++v) {
    const Integer term = binomial(N + 1, r - v) * binomial(N - r + v - 1, v) *
                         int_pow(d, static_cast<unsigned long>(v + N - r));
    if (v % 2 == 0)
      bracket += term;
    else
      bracket -= term;
  }
  const Rational local_estr =
      Rational(1, r - d + 1) *
      (Rational(1, d) * Rational(int_pow(1 - d, static_cast<unsigned long>(r) + 1) - 1) +
       Rational(r + 1));
  const int sign = r % 2 == 0 ? -1 : 1;  // (-1)^(r+1)
  const Rational per_point =
      local_estr + Rational(sign) * Rational(int_pow(d - 1, static_cast<unsigned long>(r) + 1)) - 1;
  return Rational(bracket) +
         Rational(spec.t_top) * Rational(int_pow(d, static_cast<unsigned long>(N - r) - 1)) * per_point;
}

SolidsRow solids_row(const std::string& name, int N, long t3) {
  const Integer triples = binomial(N + 1, 3) - t3;
  if (triples < 0 || triples % 4 != 0)
    throw std::invalid_argument("t3 incompatible with a plane arrangement: C(N+1,3) - t3 "
                                "must be a nonnegative multiple of 4");
  const long t4 = Integer(triples / 4).get_si();
  SolidsRow row{name, N, t3, t4, {}, {}};
  row.estr_double = arrangement_estr(ArrangementSpec::make(N, 3, 2, t4));
  row.estr_triple = arrangement_estr(ArrangementSpec::make(N, 3, 3, t4));
  return row;
}

std::vector<SolidsRow> solids_table() {
  return {
      solids_row("A", 5, 8),
      solids_row("B", 7, 8),
      solids_row("C", 7, 32),
      solids_row("D,E", 13, 256),
      solids_row("F", 13, 208),
  };
}

}  // namespace stringy
