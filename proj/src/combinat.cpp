#include "stringy/combinat.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace stringy {

Integer binomial(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return result;
}

Integer multinomial(int r, std::span<const int> parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial part must be nonnegative");
    sum += p;
  }
  if (sum != r) throw std::invalid_argument("multinomial parts must sum to r");
  Integer result = 1;
  long cumulative = 0;
  for (int p : parts) {
    cumulative += p;
    result *= binomial(cumulative, p);
  }
  return result;
}

ABCContext ABCContext::make(int r, int n, int ell) {
  if (!(r >= ell && ell >= 2 && n + 1 >= ell))
    throw std::invalid_argument("invalid parameters: require r >= ell >= 2 and n + 1 >= ell");
  ABCContext ctx;
  ctx.r = r;
  ctx.n = n;
  ctx.ell = ell;
  ctx.d = std::lcm(static_cast<long>(n) + 1, static_cast<long>(ell));
  return ctx;
}

int a_func(const ABCContext& ctx, long i) {
  const long step = ctx.d / (ctx.n + 1);
  if (i < 0 || i % step != 0) return 0;
  return i / step <= ctx.n - 1 ? 1 : 0;
}

namespace {

// Visits every nonnegative integer vector of the given length summing to
// total.
void for_each_composition(int total, int length,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<size_t>(length), 0);
  std::function<void(int, int)> rec = [&](int index, int rest) {
    if (index == length - 1) {
      parts[static_cast<size_t>(index)] = rest;
      visit(parts);
      return;
    }
    for (int value = 0; value <= rest; ++value) {
      parts[static_cast<size_t>(index)] = value;
      rec(index + 1, rest - value);
    }
  };
  rec(0, total);
}

}  // namespace

Integer b_func(const ABCContext& ctx, long j) {
  if (j < 0) return 0;
  const long step = ctx.d / ctx.ell;
  Integer total = 0;
  // parts[idx] is the multiplicity of exponent idx * d/ell, idx = 0..ell-2.
  for_each_composition(ctx.r, ctx.ell - 1, [&](const std::vector<int>& parts) {
    long weight = 0;
    for (size_t idx = 1; idx < parts.size(); ++idx)
      weight += step * static_cast<long>(idx) * parts[idx];
    if (weight == j) total += multinomial(ctx.r, parts);
  });
  return total;
}

Integer c_func(const ABCContext& ctx, const Rational& k) {
  if (!k.is_integer() || k.sign() < 0) return 0;
  if (!k.num().fits_slong_p()) return 0;  // beyond every nonzero a/b position
  const long kk = k.num().get_si();
  const long step = ctx.d / (ctx.n + 1);
  Integer total = 0;
  for (int p = 0; p <= ctx.n - 1; ++p) {
    const long i = step * p;
    if (i > kk) break;
    total += b_func(ctx, kk - i);
  }
  return total;
}

Rational eulerian_recurrence(int kappa, int lambda, int nu, int xi) {
  if (kappa < 0 || nu < 0 || xi < 0)
    throw std::invalid_argument("eulerian parameters kappa, nu, xi must be nonnegative");
  if (lambda < 0 || lambda > kappa) return 0;
  std::vector<Rational> row{Rational(1)};  // row kappa' holds S(kappa', 0..kappa')
  for (int k = 0; k < kappa; ++k) {
    std::vector<Rational> next(static_cast<size_t>(k) + 2);
    next[0] = Rational(binomial(xi, k + 1));
    for (int l = 1; l <= k + 1; ++l) {
      const Rational above = l <= k ? row[static_cast<size_t>(l)] : Rational(0);
      const Rational left = row[static_cast<size_t>(l) - 1];
      next[static_cast<size_t>(l)] =
          (Rational(static_cast<long>(nu) * l - k + xi) * above +
           Rational(static_cast<long>(nu) * (k - l + 2) + k - xi) * left) /
          Rational(k + 1);
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(lambda)];
}

Integer eulerian_closed(int kappa, int lambda, int nu, int xi) {
  if (kappa < 0 || nu < 0 || xi < 0)
    throw std::invalid_argument("eulerian parameters kappa, nu, xi must be nonnegative");
  if (lambda < 0 || lambda > kappa) return 0;
  Integer total = 0;
  for (int j = 0; j <= lambda; ++j) {
    Integer term = binomial(kappa + 1, j) *
                   binomial(static_cast<long>(nu) * (lambda - j) + xi, kappa);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace stringy
