#pragma once

// Small-time transition density of the flight: a uniform atom of mass
// e^{-lambda t} on the sphere of radius c t plus an absolutely continuous
// part on the open ball, accurate to o(t^3).

#include <vector>

#include "rflight/model.hpp"

namespace rflight {

/// Pieces of the bracket in the a.c. density, without the e^{-lambda t}
/// factor. Each piece comes from one, two, or three switches respectively.
struct AcTerms {
  double one_switch = 0.0;    // lambda / (4 pi c^2 t r) ln((ct+r)/(ct-r))
  double two_switch = 0.0;    // lambda^2 / (2 pi^2 c^2 sqrt(c^2 t^2 - r^2))
  double three_switch = 0.0;  // lambda^3 / (8 pi c^3)

  double sum() const { return one_switch + two_switch + three_switch; }
};

/// Radius below which the log term uses its limit lambda / (2 pi c^3 t^2),
/// as a fraction of c t.
inline constexpr double kOriginSwitchover = 1e-9;

AcTerms ac_density_terms(double r, double t, const FlightParams& p);

/// Probability of no switch on [0, t]: e^{-lambda t}.
double singular_weight(double t, const FlightParams& p);

/// e^{-lambda t} * ac_density_terms(r).sum() for r < c t; exactly 0 for r >= c t.
double ac_density(double r, double t, const FlightParams& p);

DensityValue density_at(const Vec3& x, double t, const FlightParams& p);

/// sum_{k>=1} z^{2k} / (4k^2 - 1) for 0 <= z <= 1, summed as a power series.
/// When the term budget runs out before the tail tolerance is met (z close
/// to 1) the elementary closed form (1 - (1 - z^2) artanh(z) / z) / 2 is used.
double subball_log_series(double z, const SeriesTruncation& trunc = {});

/// Pr{|X(t)| <= r} from the a.c. part, for 0 <= r < c t:
///   e^{-lt} [ (2 lambda r / c) S(r/ct) + (lt)^2/pi (asin z - z sqrt(1-z^2))
///             + lambda^3 r^3 / (6 c^3) ].
/// Throws RadiusOutsideBall for r >= c t.
double ball_prob_asymptotic(double r, double t, const FlightParams& p,
                            const SeriesTruncation& trunc = {});

/// Exact mass of the a.c. part, 1 - e^{-lambda t}.
double g_exact(double t, const FlightParams& p);

/// Mass of the approximate a.c. density, e^{-lt} (lt + (lt)^2/2 + (lt)^3/6).
double g_tilde(double t, const FlightParams& p);

/// Pr{N(t) >= 4} = g_exact - g_tilde.
double switch_tail_error(double t, const FlightParams& p);

struct RadialProfile {
  double t = 0.0;
  std::vector<double> radii;
  std::vector<double> values;
};

/// ac_density on the uniform grid [0, r_max] with n_points >= 2, r_max < c t.
RadialProfile radial_profile(double t, const FlightParams& p, int n_points, double r_max);

}  // namespace rflight
