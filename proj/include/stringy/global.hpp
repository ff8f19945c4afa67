#pragma once

#include "stringy/estr.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stringy {

// A projective complete intersection of the given multidegree in P^N whose
// only singular points are of the hypersurface type handled by Singularity,
// each with its number of occurrences. Every singularity must have dimension
// r = N - degrees.size().
struct CompleteIntersectionSpec {
  int N = 0;
  std::vector<long> degrees;
  std::vector<std::pair<Singularity, long>> singularities;

  int dim() const { return N - static_cast<int>(degrees.size()); }
};

// Euler number of a smooth complete intersection of the given multidegree:
//   [sum_{v=0}^{r} (-1)^v C(N+1, r-v) h_v(degrees)] * prod_j d_j
// with h_v the complete homogeneous symmetric function of the degrees.
Integer euler_smooth_ci(int N, std::span<const long> degrees);

// Stringy Euler number: the smooth value plus, per singular point,
// e_str(local) + (-1)^{r+1} mu(local) - 1.
Rational estr_ci(const CompleteIntersectionSpec& spec);

// Stringy E-function of a variety with isolated singularities:
// E(V) + sum_i (E_str(local at Q_i) - 1).
StringyExpression estr_global(const UVPolynomial& e_smooth,
                              std::span<const StringyExpression> locals);

// Stringy Euler number of a quartic hypersurface in P^N singular along
// 2^kappa C(N+1, kappa+1) ordinary double points:
//   (1/4)((-3)^{N+1} - 1) + N + 1
//   + 2^kappa C(N+1, kappa+1) [ (1/(N-2))((1/2)((-1)^N - 1) + N)
//                               + (-1)^N - 1 ].
// Requires N >= 3 and 0 <= kappa <= N.
Rational goryunov_estr(int N, int kappa);
Integer goryunov_node_count(int N, int kappa);

// Stringy Euler number of the intersection of two quadrics in P^n with a
// single singular point of type (r, n, ell) = (n-2, n, 2). Requires n >= 4.
Rational segre_knorrer_estr(long n);

// A d-fold cyclic cover V of P^r branched along N+1 hyperplanes in general
// position, realized in P^N; its singular points sit over the t_{r+1} points
// of the arrangement lying on r+1 hyperplanes, d^{N-r-1} points of V each,
// every one of local type (r, d-1, d).
struct ArrangementSpec {
  int N = 0;
  int r = 0;
  int d = 0;      // requires 2 <= d <= r
  long t_top = 0; // t_{r+1}

  static ArrangementSpec make(int N, int r, int d, long t_top);
};

Rational arrangement_estr(const ArrangementSpec& spec);

// Double and triple solids branched along N+1 planes of P^3 with t3 triple
// and t4 = (C(N+1,3) - t3)/4 quadruple points.
struct SolidsRow {
  std::string name;
  int N = 0;
  long t3 = 0;
  long t4 = 0;
  Rational estr_double;  // d = 2
  Rational estr_triple;  // d = 3
};

SolidsRow solids_row(const std::string& name, int N, long t3);
std::vector<SolidsRow> solids_table();

}  // namespace stringy
