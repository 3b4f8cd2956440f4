#pragma once

// Series for (arctan z)^n, n = 1..4, in powers of w = z^2/(1+z^2):
//
//   (arctan z)^n = P_n (z / sqrt(1+z^2))^n sum_k a_{n,k} w^k
//
// with P_1 = P_3 = 1/sqrt(pi), P_2 = sqrt(pi)/2, P_4 = pi/2. These are the
// Laplace-side objects behind the two- and three-switch characteristic
// functions, so charfun reuses the same coefficients.

#include "rflight/model.hpp"

namespace rflight {

struct ArctanSeriesTerm {
  unsigned k = 0;
  double coefficient = 0.0;
  unsigned ratio_power = 0;  // power of w
};

/// Constant P_n in front of the series. Throws UnsupportedPower outside 1..4.
double arctan_pow_prefactor(int n);

/// a_{n,k}. Throws UnsupportedPower outside 1..4.
ArctanSeriesTerm arctan_pow_term(int n, unsigned k);

/// Truncated series value of (arctan z)^n.
double arctan_pow(int n, double z, const SeriesTruncation& trunc = {});

/// gamma_k = 1/(k+2) sum_{l=0}^k l! (k-l)! / ((l+1) Gamma(l+3/2) Gamma(k-l+3/2)),
/// the fourth-power coefficients. gamma_0 = 2/pi.
double quartic_gamma(unsigned k);

struct GammaSumIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of
///   sum_{k=0}^n Gamma(k+1/2) Gamma(n-k+1/2) / (k! (n-k)! (2k+a))
///     = pi Gamma(a/2) Gamma(n+(a+1)/2) / ((2n+a) Gamma((a+1)/2) Gamma(n+a/2)).
/// Throws InvalidParameter when a is a nonpositive integer.
GammaSumIdentity lemma_a1_check(unsigned n, double a);

}  // namespace rflight
