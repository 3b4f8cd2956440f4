#pragma once

// Characteristic functions of the random flight. By isotropy each one depends
// on the frequency vector only through its norm, and all are real.

#include "rflight/model.hpp"

namespace rflight {

struct FreqQuery {
  double alpha_norm = 0.0;  // 1/length
  double t = 0.0;           // time, > 0
};

/// Throws DomainError unless alpha_norm >= 0 and t > 0 (both finite).
FreqQuery make_query(double alpha_norm, double t);

/// Below this value of c t |alpha| every H_n switches to its Taylor limit
/// 1 - x^2 / (3 (n + 2)).
inline constexpr double kSmallArgument = 1e-3;

/// No switch: sin(x)/x, x = c t |alpha|.
double h0(const FreqQuery& q, const FlightParams& p);

/// Exactly one switch: (sin x Si(2x) + cos x Ci(2x)) / x^2 with the
/// nonpositive Ci convention of ci_paper.
double h1(const FreqQuery& q, const FlightParams& p);

/// Exactly two switches, Bessel-hypergeometric series
///   sum_k x^{k-1} / (2^{k-1} k! (2k+1)^2) 5F4(...; 1) J_{k+1}(x).
/// The tail criterion is only consulted once k >= x, where the Bessel factor
/// decays monotonically. Throws TruncationNotConverged if it is never met.
double h2_series(const FreqQuery& q, const FlightParams& p, const SeriesTruncation& trunc = {});

/// Exactly three switches,
///   3 pi^{3/2} sum_k gamma_k x^{k-3/2} / (2^{k+3/2} (k+1)!) J_{k+3/2}(x).
/// Same truncation rule as h2_series.
double h3_series(const FreqQuery& q, const FlightParams& p, const SeriesTruncation& trunc = {});

/// Small-time approximation of the unconditional characteristic function,
/// accurate to o(t^3):
///   e^{-lt} { H0 + lambda/(c^2 t a^2) [sin x Si(2x) + cos x Ci(2x)]
///             + lambda^2 t/(c a) J_1(x) + lambda^3 sqrt(pi) t^{3/2} / (2 c a)^{3/2} J_{3/2}(x) }
double h_asymptotic(const FreqQuery& q, const FlightParams& p);

/// e^{-lt} sum_{n<=3} (lt)^n / n! H_n, using the full series for H2 and H3.
double h_mixture_through_three(const FreqQuery& q, const FlightParams& p,
                               const SeriesTruncation& trunc = {});

}  // namespace rflight
