#pragma once

#include "stringy/expression.hpp"
#include "stringy/localsing.hpp"

#include <span>
#include <vector>

namespace stringy {

enum class DivisorKind {
  FermatHypersurface,   // Y_ell^(dim)
  ProjectiveSpace,      // P^dim
  P1BundleOverFermat,   // P(O + O(1)) over Y_ell^(dim-1)
};

struct ExceptionalDivisor {
  DivisorKind kind = DivisorKind::FermatHypersurface;
  int ell = 0;  // unused for ProjectiveSpace
  int dim = 0;  // total dimension, always r - 1
  long discrepancy = 0;
};

// The exceptional locus of the standard resolution: a chain D_1, ..., D_m.
// D_i meets D_j exactly when |i - j| = 1, and every pairwise intersection is
// the Fermat hypersurface Y_ell^(r-2).
struct ResolutionModel {
  Singularity s;
  int m = 0;
  std::vector<ExceptionalDivisor> divisors;  // divisors[i] is D_{i+1}
};

// Number of blowups: (n+1)/ell when ell | n+1, n/ell + 1 when ell | n.
// Any other n is outside the family this resolution covers and is an error.
int m_of(const Singularity& s);

ResolutionModel resolution_model(const Singularity& s);

// E-polynomial of the total space of one exceptional divisor.
UVPolynomial divisor_E(const ExceptionalDivisor& d);

// E-polynomial of the locally closed stratum D_J = (intersection of D_j for
// j in J) minus all other divisors. J holds 1-based divisor indices, strictly
// increasing. Strata indexed by non-adjacent pairs or three or more divisors
// are empty in a chain and yield the zero polynomial.
UVPolynomial stratum_E(const ResolutionModel& model, std::span<const int> J);

// E_str as the sum over strata:
//   E(X \ 0) + sum_J E(D_J; u,v) prod_{j in J} (uv - 1)/((uv)^{a_j + 1} - 1).
StringyExpression assemble_estr(const Singularity& s);

// E_str by the closed two-case formula (one term block per divisor shape
// instead of a sum over subsets).
StringyExpression closed_estr(const Singularity& s);

enum class EulerMethod {
  Closed,      // evaluated closed formula
  Structural,  // sum over strata of e(D_J) / prod (a_j + 1)
};

// The stringy Euler number e_str = lim_{u,v->1} E_str.
Rational estr_euler(const Singularity& s, EulerMethod method);

// e_str(r, n) for ell = 2 by the four parity-split closed formulas.
Rational conjrem_estr(int r, long n);

// Denominator of the reduced fraction.
Integer ind_str(const Rational& e);

}  // namespace stringy
