#include "rflight/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rflight {
namespace {

constexpr double kPi = std::numbers::pi;

void check_time(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) throw Error(Errc::DomainError, "t must be finite and > 0");
}

void check_radius(double r) {
  if (!std::isfinite(r) || !(r >= 0.0)) throw Error(Errc::DomainError, "r must be finite and >= 0");
}

}  // namespace

AcTerms ac_density_terms(double r, double t, const FlightParams& p) {
  check_time(t);
  check_radius(r);
  const double ct = p.reach(t);
  if (r >= ct) return AcTerms{};
  const double c = p.c();
  const double lambda = p.lambda();
  const double z = r / ct;
  // ln((1+z)/(1-z)) / r = 2 artanh(z) / (z ct)
  const double log_ratio = z < kOriginSwitchover ? 1.0 : std::atanh(z) / z;
  AcTerms terms;
  terms.one_switch = lambda / (2.0 * kPi * c * c * c * t * t) * log_ratio;
  terms.two_switch = lambda * lambda / (2.0 * kPi * kPi * c * c * std::sqrt((ct - r) * (ct + r)));
  terms.three_switch = lambda * lambda * lambda / (8.0 * kPi * c * c * c);
  return terms;
}

double singular_weight(double t, const FlightParams& p) {
  check_time(t);
  return std::exp(-p.lambda() * t);
}

double ac_density(double r, double t, const FlightParams& p) {
  const AcTerms terms = ac_density_terms(r, t, p);
  if (r >= p.reach(t)) return 0.0;
  return singular_weight(t, p) * terms.sum();
}

DensityValue density_at(const Vec3& x, double t, const FlightParams& p) {
  if (!is_finite(x)) throw Error(Errc::NonFinite, "position must be finite");
  return DensityValue{p.reach(t), singular_weight(t, p), ac_density(norm(x), t, p)};
}

double subball_log_series(double z, const SeriesTruncation& trunc) {
  if (!(z >= 0.0) || !(z <= 1.0)) throw Error(Errc::DomainError, "z must lie in [0, 1]");
  const double w = z * z;
  if (w == 0.0) return 0.0;
  double w_pow = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= trunc.max_terms; ++k) {
    w_pow *= w;
    const double term = w_pow / (4.0 * k * k - 1.0);
    sum += term;
    if (term < trunc.tail_tol) return sum;
  }
  if (z == 1.0) return 0.5;
  return 0.5 * (1.0 - (1.0 - z) * (1.0 + z) * std::atanh(z) / z);
}

double ball_prob_asymptotic(double r, double t, const FlightParams& p, const SeriesTruncation& trunc) {
  check_time(t);
  check_radius(r);
  const double ct = p.reach(t);
  if (r >= ct)
    throw Error(Errc::RadiusOutsideBall,
                "r = " + std::to_string(r) + " must be below c t = " + std::to_string(ct));
  const double c = p.c();
  const double lambda = p.lambda();
  const double lt = lambda * t;
  const double z = r / ct;
  const double one = 2.0 * lambda * r / c * subball_log_series(z, trunc);
  const double two = lt * lt / kPi * (std::asin(z) - z * std::sqrt((1.0 - z) * (1.0 + z)));
  const double three = lambda * lambda * lambda * r * r * r / (6.0 * c * c * c);
  return std::exp(-lt) * (one + two + three);
}

double g_exact(double t, const FlightParams& p) {
  check_time(t);
  return -std::expm1(-p.lambda() * t);
}

double g_tilde(double t, const FlightParams& p) {
  check_time(t);
  const double x = p.lambda() * t;
  return std::exp(-x) * (x + x * x / 2.0 + x * x * x / 6.0);
}

double switch_tail_error(double t, const FlightParams& p) {
  check_time(t);
  const double x = p.lambda() * t;
  if (x >= 1.0) return 1.0 - std::exp(-x) * (1.0 + x + x * x / 2.0 + x * x * x / 6.0);
  // e^{-x} sum_{k>=4} x^k / k!, free of the cancellation in 1 - ...
  double term = x * x * x * x / 24.0;
  double sum = 0.0;
  for (int k = 4; k < 200 && term > 1e-18 * sum; ++k) {
    sum += term;
    term *= x / (k + 1);
  }
  return std::exp(-x) * sum;
}

RadialProfile radial_profile(double t, const FlightParams& p, int n_points, double r_max) {
  check_time(t);
  check_radius(r_max);
  if (n_points < 2) throw Error(Errc::InvalidParameter, "n_points must be >= 2");
  if (r_max >= p.reach(t))
    throw Error(Errc::RadiusOutsideBall, "r_max = " + std::to_string(r_max) +
                                             " must be below c t = " + std::to_string(p.reach(t)));
  RadialProfile profile;
  profile.t = t;
  profile.radii.reserve(n_points);
  profile.values.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double r = i == n_points - 1 ? r_max : r_max * i / (n_points - 1);
    profile.radii.push_back(r);
    profile.values.push_back(ac_density(r, t, p));
  }
  return profile;
}

}  // namespace rflight
