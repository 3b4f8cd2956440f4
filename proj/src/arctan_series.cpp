#include "rflight/arctan_series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rflight/specfun.hpp"

namespace rflight {
namespace {

constexpr double kPi = std::numbers::pi;

void check_power(int n) {
  if (n < 1 || n > 4)
    throw Error(Errc::UnsupportedPower, "arctan power must be in 1..4, got " + std::to_string(n));
}

// Gamma(k+1/2) / (k! (2k+1))
double first_power_coefficient(unsigned k) {
  return std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / (2.0 * k + 1.0);
}

}  // namespace

double arctan_pow_prefactor(int n) {
  check_power(n);
  switch (n) {
    case 1:
    case 3: return 1.0 / std::sqrt(kPi);
    case 2: return 0.5 * std::sqrt(kPi);
    default: return 0.5 * kPi;
  }
}

ArctanSeriesTerm arctan_pow_term(int n, unsigned k) {
  check_power(n);
  double coefficient = 0.0;
  switch (n) {
    case 1: coefficient = first_power_coefficient(k); break;
    case 2: coefficient = std::exp(std::lgamma(k + 1.0) - std::lgamma(k + 1.5)) / (k + 1.0); break;
    case 3: coefficient = first_power_coefficient(k) * hyp5f4_unit(k); break;
    default: coefficient = quartic_gamma(k); break;
  }
  return ArctanSeriesTerm{k, coefficient, k};
}

double arctan_pow(int n, double z, const SeriesTruncation& trunc) {
  check_power(n);
  if (!std::isfinite(z)) throw Error(Errc::NonFinite, "z must be finite");
  const double s = z / std::sqrt(1.0 + z * z);
  const double w = s * s;
  double sum = 0.0;
  double w_pow = 1.0;
  for (int k = 0; k < trunc.max_terms; ++k) {
    const double term = arctan_pow_term(n, static_cast<unsigned>(k)).coefficient * w_pow;
    sum += term;
    if (std::abs(term) < trunc.tail_tol) break;
    w_pow *= w;
  }
  return arctan_pow_prefactor(n) * std::pow(s, n) * sum;
}

double quartic_gamma(unsigned k) {
  double sum = 0.0;
  for (unsigned l = 0; l <= k; ++l) {
    const double log_mag = std::lgamma(l + 1.0) + std::lgamma(k - l + 1.0) -
                           std::lgamma(l + 1.5) - std::lgamma(k - l + 1.5);
    sum += std::exp(log_mag) / (l + 1.0);
  }
  return sum / (k + 2.0);
}

GammaSumIdentity lemma_a1_check(unsigned n, double a) {
  if (!std::isfinite(a) || (a <= 0.0 && std::floor(a) == a))
    throw Error(Errc::InvalidParameter, "a must not be a nonpositive integer, got " + std::to_string(a));
  double lhs = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const double log_mag = std::lgamma(k + 0.5) + std::lgamma(n - k + 0.5) -
                           std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    lhs += std::exp(log_mag) / (2.0 * k + a);
  }
  int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
  const double log_rhs = log_abs_gamma(0.5 * a, s1) + log_abs_gamma(n + 0.5 * (a + 1.0), s2) -
                         log_abs_gamma(0.5 * (a + 1.0), s3) - log_abs_gamma(n + 0.5 * a, s4);
  const double rhs = s1 * s2 * s3 * s4 * kPi * std::exp(log_rhs) / (2.0 * n + a);
  return GammaSumIdentity{lhs, rhs};
}

}  // namespace rflight
