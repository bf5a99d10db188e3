#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sp/numeric.hpp"

namespace sp {

struct BoundResult {
  std::optional<Rational> lower, upper, exact;
  std::string formula;
};

// Exact number of single-peaked (n,m)-elections; covers n = 1, m <= 2,
// n = 2, m = 3 and m = 4. Throws capability_error outside those cases.
BigInt sp_count_exact(int n, int m);
bool sp_count_exact_defined(int n, int m);

// Upper and lower bounds on the single-peaked election count, as exact
// integers; exact is filled in when sp_count_exact covers (n,m).
BoundResult sp_bounds_ic(int n, int m);

// Same bounds as probabilities under IC (divided by (m!)^n).
BoundResult ic_probability_bounds(int n, int m);

enum class SwKind { single_peaked, group_separable, generic };

// Natural log of the pattern-based upper bound on the number of elections:
// m! * 4^{(m-1)(n-1)} (single-peaked), m! * (3+2*sqrt(2))^{m(n-1)}
// (group-separable), or m! * c^{m(n-1)} for an explicit constant c passed
// as ln c (generic).
double sw_upper_log(int n, int m, SwKind kind, double ln_ck = 0);

// Exponent of the explicit constant 15^{2k^4 C(k^2,k)}.
BigInt marcus_tardos_exponent(int k);
// The constant itself; guarded to exponents <= 10^5 (k <= 3).
BigInt marcus_tardos_ck(int k);
double marcus_tardos_ln_ck(int k);
// Best published constants: 1, 4, 13.738 for k = 2, 3, 4.
std::optional<double> known_best(int k);

// Exact probability of single-peakedness under IAC; covers n = 1, m <= 2,
// n = 2 and m = 3. Throws capability_error otherwise.
Rational iac_exact(int n, int m);
bool iac_exact_defined(int n, int m);

// IAC probability bounds via multiset coefficients; lower bound uses the
// inclusion-exclusion form.
BoundResult iac_bounds(int n, int m);

// Lower bound on the single-peakedness probability under the Polya urn
// model with homogeneity a >= 1, evaluated exactly.
Rational polya_lower(int n, int m, const BigInt& a);

// Simplified a = m! lower bound: (1/n)(1 + 2 ln(n-1)/m! * C(2m-2,m-1)).
double polya_lower_simple(int n, int m);

// Mallows normalization constant Z = prod_{i=1..m} (1 + phi + ... + phi^{i-1}).
Rational mallows_z(int m, const Rational& phi);

// Lower bound ((1 + phi(m-1) + phi^2 (m-2)(m-3)/2) / Z)^n.
Rational mallows_lower(int n, int m, const Rational& phi);

// Both closed-form bounds at phi = 1/m: the 1.5-factor bound and the
// rougher (1 - 1/m)^{(m-1)n}.
struct MallowsSimpleBounds {
  double refined = 0;
  double rough = 0;
};
MallowsSimpleBounds mallows_lower_simple(int n, int m);

}  // namespace sp
