#include "stringy/localsing.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace stringy;

TEST_CASE("degree and weights") {
  const auto s = Singularity::make(3, 5, 2);
  CHECK(s.degree() == 6);  // lcm(6, 2)
  CHECK(s.weights() == std::vector<long>{1, 3, 3, 3});

  const auto t = Singularity::make(4, 5, 4);
  CHECK(t.degree() == 12);  // lcm(6, 4)
  CHECK(t.weights() == std::vector<long>{2, 3, 3, 3, 3});
}

TEST_CASE("poincare series closed product equals the long division") {
  for (int r = 2; r <= 6; ++r) {
    for (int ell = 2; ell <= std::min(r, 6); ++ell) {
      for (int n = ell - 1; n <= 12; ++n) {
        const auto s = Singularity::make(r, n, ell);
        WeightSystem ws{s.degree(), s.weights()};
        CHECK(poincare_series(ws) == poincare_series_A(s));
      }
    }
  }
}

TEST_CASE("inconsistent weight systems raise") {
  // (1 - t^3)^2 / (1 - t^2)^2 leaves a remainder
  WeightSystem ws{5, {2, 2}};
  CHECK_THROWS_AS(poincare_series(ws), std::domain_error);
  WeightSystem bad_weight{4, {0, 2}};
  CHECK_THROWS_AS(poincare_series(bad_weight), std::invalid_argument);
}

TEST_CASE("milnor number equals the series at t = 1") {
  for (int r = 2; r <= 6; ++r) {
    for (int ell = 2; ell <= std::min(r, 6); ++ell) {
      for (int n = ell - 1; n <= 12; ++n) {
        const auto s = Singularity::make(r, n, ell);
        CHECK(Rational(milnor_number(s)) == poincare_series_A(s).eval_at_one());
      }
    }
  }
  CHECK(milnor_number(Singularity::make(3, 2, 3)) == Integer(16));
  CHECK(milnor_number(Singularity::make(3, 1, 2)) == Integer(1));
}

TEST_CASE("graded dimension bounds") {
  const auto series = poincare_series_A(Singularity::make(3, 2, 3));
  CHECK(graded_dim(series, 0) == Integer(1));
  CHECK(graded_dim(series, 2) == Integer(6));
  CHECK(graded_dim(series, -1) == Integer(0));
  CHECK(graded_dim(series, 99) == Integer(0));
}

TEST_CASE("link hodge numbers read off the milnor algebra") {
  // h^{p, r-1-p} is the dimension of the graded piece of the Milnor algebra
  // in degree (p+1) d - sum of weights.
  for (int r = 2; r <= 5; ++r) {
    for (int ell = 2; ell <= r; ++ell) {
      for (int n = ell - 1; n <= 9; ++n) {
        const auto s = Singularity::make(r, n, ell);
        const auto series = poincare_series_A(s);
        const auto weights = s.weights();
        const long wsum = std::accumulate(weights.begin(), weights.end(), 0L);
        for (int p = 0; p <= r - 1; ++p) {
          CHECK(link_hodge(s, p) == graded_dim(series, (p + 1) * s.degree() - wsum));
          CHECK(link_hodge(s, p) == link_hodge(s, r - 1 - p));  // Hodge symmetry
        }
      }
    }
  }
  CHECK_THROWS_AS(link_hodge(Singularity::make(3, 2, 3), 3), std::invalid_argument);
  CHECK_THROWS_AS(link_hodge(Singularity::make(3, 2, 3), -1), std::invalid_argument);
}

TEST_CASE("punctured E vanishes at u = v = 1") {
  for (int r = 2; r <= 5; ++r)
    for (int ell = 2; ell <= r; ++ell)
      for (int n = ell - 1; n <= 9; ++n)
        CHECK(e_punctured(Singularity::make(r, n, ell)).eval_at_one() == Rational(0));
}

TEST_CASE("punctured E of the threefold node") {
  // A_{1,2}^{(3)}: E(X \ 0) = (uv - 1)(1 + 2uv + (uv)^2)
  const UVPolynomial e = e_punctured(Singularity::make(3, 1, 2));
  UVPolynomial expect = UVPolynomial::uv_power_minus_one(1) *
                        (UVPolynomial::constant(Rational(1)) +
                         UVPolynomial::monomial(Rational(2), 1, 1) +
                         UVPolynomial::uv_power(2));
  CHECK(e == expect);
}

TEST_CASE("fermat hodge numbers") {
  // cubic surface Y_3^(2): h^{1,1} = 7, h^{0,0} = h^{2,2} = 1
  const auto f = FermatSpec::make(3, 2);
  CHECK(fermat_hodge(f, 0, 0) == Integer(1));
  CHECK(fermat_hodge(f, 1, 1) == Integer(7));
  CHECK(fermat_hodge(f, 2, 2) == Integer(1));
  CHECK(fermat_hodge(f, 1, 0) == Integer(0));
  CHECK_THROWS_AS(fermat_hodge(f, 3, 0), std::invalid_argument);

  for (int ell = 2; ell <= 5; ++ell)
    for (int dim = 0; dim <= 5; ++dim)
      for (int p = 0; p <= dim; ++p)
        CHECK(fermat_hodge(FermatSpec::make(ell, dim), p, dim - p) ==
              fermat_hodge(FermatSpec::make(ell, dim), dim - p, p));
}

TEST_CASE("fermat E polynomials") {
  // plane cubic = elliptic curve: E = 1 - u - v + uv
  const UVPolynomial cubic = fermat_E(FermatSpec::make(3, 1));
  UVPolynomial expect;
  expect.add_term(Rational(1), 0, 0);
  expect.add_term(Rational(-1), 1, 0);
  expect.add_term(Rational(-1), 0, 1);
  expect.add_term(Rational(1), 1, 1);
  CHECK(cubic == expect);

  // cubic surface: E = 1 + 7uv + (uv)^2
  const UVPolynomial surface = fermat_E(FermatSpec::make(3, 2));
  UVPolynomial expect2 = UVPolynomial::constant(Rational(1)) +
                         UVPolynomial::monomial(Rational(7), 1, 1) +
                         UVPolynomial::uv_power(2);
  CHECK(surface == expect2);

  // conics are rational curves: E = 1 + uv
  CHECK(fermat_E(FermatSpec::make(2, 1)) ==
        UVPolynomial::constant(Rational(1)) + UVPolynomial::uv_power(1));
}

TEST_CASE("fermat euler number agrees with the E polynomial") {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int dim = 0; dim <= 6; ++dim) {
      const auto f = FermatSpec::make(ell, dim);
      CHECK(Rational(fermat_euler(f)) == fermat_E(f).eval_at_one());
    }
  }
  CHECK(fermat_euler(FermatSpec::make(3, 1)) == Integer(0));
  CHECK(fermat_euler(FermatSpec::make(3, 2)) == Integer(9));
  CHECK(fermat_euler(FermatSpec::make(2, 3)) == Integer(4));  // quadric threefold
}

TEST_CASE("fermat spec validation") {
  CHECK_THROWS_AS(FermatSpec::make(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(FermatSpec::make(3, -1), std::invalid_argument);
}
