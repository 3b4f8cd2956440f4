#include "rflight/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rflight/model.hpp"
#include "rflight/quadrature.hpp"

namespace rflight {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)
double bessel_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > q) break;
  }
  return sum * std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
}

// Miller's backward recurrence J_{v-1} = (2v/x) J_v - J_{v+1}, started well
// above max(order, x) where J is the minimal solution.
double bessel_miller(BesselOrder order, double x) {
  const double shift = order.kind == BesselOrder::Kind::Integer ? 0.0 : 0.5;
  const int m = static_cast<int>(order.n);
  const double top = std::max<double>(m, x);
  int start = static_cast<int>(top + 20.0 + std::sqrt(60.0 * (top + 1.0)));
  start += start % 2;

  constexpr double kBig = 1e250;
  double above = 0.0;  // index k+1
  double here = 1e-30;  // index k
  double target = 0.0;
  double norm_sum = 0.0;  // integer orders: J_0 + 2 sum J_2k

  for (int k = start; k > 0; --k) {
    const double below = (2.0 * (k + shift) / x) * here - above;
    above = here;
    here = below;  // now index k-1
    if (shift == 0.0 && (k - 1) % 2 == 0 && k - 1 > 0) norm_sum += 2.0 * here;
    if (k - 1 == m) target = here;
    if (std::abs(here) > kBig) {
      here /= kBig;
      above /= kBig;
      target /= kBig;
      norm_sum /= kBig;
    }
  }
  if (shift == 0.0) {
    norm_sum += here;  // J_0
    return target / norm_sum;
  }
  // One more step reaches order -1/2.
  const double at_half = here;
  const double at_minus_half = (2.0 * shift / x) * here - above;
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double exact_half = amp * std::sin(x);
  const double exact_minus_half = amp * std::cos(x);
  const double scale = (exact_half * at_half + exact_minus_half * at_minus_half) /
                       (at_half * at_half + at_minus_half * at_minus_half);
  return target * scale;
}

constexpr double kTaylorLimit = 10.0;

double si_taylor(double x) {
  // sum_k (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
  double power = x;  // (-1)^k x^{2k+1}/(2k+1)!
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    power *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
    const double term = power / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

double cin_neg_taylor(double x) {
  // sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
  double power = 1.0;  // (-1)^k x^{2k}/(2k)!
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    power *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
    const double term = power / (2.0 * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1e-300, std::abs(sum))) break;
  }
  return sum;
}

int tail_intervals(double x) { return 4000 + static_cast<int>(20.0 * x); }

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw Error(Errc::DomainError, "log_gamma requires finite x > 0, got " + std::to_string(x));
  return std::lgamma(x);
}

double log_abs_gamma(double x, int& sign) {
  if (is_nonpositive_integer(x) || !std::isfinite(x))
    throw Error(Errc::DomainError, "Gamma has a pole at " + std::to_string(x));
  sign = 1;
  if (x < 0.0 && static_cast<long long>(std::floor(x)) % 2 != 0) sign = -1;
  return std::lgamma(x);
}

double pochhammer(double x, unsigned k) {
  double product = 1.0;
  for (unsigned i = 0; i < k; ++i) product *= x + i;
  return product;
}

double bessel_j(BesselOrder order, double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw Error(Errc::DomainError, "bessel_j requires finite x >= 0, got " + std::to_string(x));
  const double nu = order.value();
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= 2.0 || 0.25 * x * x < nu + 1.0) return bessel_series(nu, x);
  if (order.kind == BesselOrder::Kind::HalfInteger && order.n <= 1) {
    const double amp = std::sqrt(2.0 / (kPi * x));
    if (order.n == 0) return amp * std::sin(x);
    return amp * (std::sin(x) / x - std::cos(x));
  }
  return bessel_miller(order, x);
}

double si(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw Error(Errc::DomainError, "si requires finite x >= 0, got " + std::to_string(x));
  if (x <= kTaylorLimit) return si_taylor(x);
  const auto tail = quad::integrate([](double s) { return std::sin(s) / s; }, kTaylorLimit, x,
                                    1e-13, tail_intervals(x));
  return si_taylor(kTaylorLimit) + tail.value;
}

double ci_paper(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw Error(Errc::DomainError, "ci_paper requires finite x >= 0, got " + std::to_string(x));
  if (x == 0.0) return 0.0;
  if (x <= kTaylorLimit) return std::min(0.0, cin_neg_taylor(x));
  const auto tail = quad::integrate([](double s) { return (std::cos(s) - 1.0) / s; },
                                    kTaylorLimit, x, 1e-13, tail_intervals(x));
  return cin_neg_taylor(kTaylorLimit) + tail.value;
}

double hyp5f4_unit(unsigned k) {
  // Every ratio t_{j+1}/t_j is positive for j < k: the two negative
  // numerator parameters pair up, the denominator pair is squared.
  const double kk = k;
  double log_term = 0.0;
  double sum = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    const double jj = j;
    const double num = (1.0 + jj) * (1.0 + jj) * (kk - jj) * (kk + 0.5 - jj);
    const double den = (kk - 0.5 - jj) * (kk - 0.5 - jj) * (1.5 + jj) * (2.0 + jj);
    log_term += std::log(num) - std::log(den);
    sum += std::exp(log_term);
  }
  return sum;
}

double hyp3f2_unit_terminating(unsigned n, double a) {
  if (is_nonpositive_integer(a) || !std::isfinite(a))
    throw Error(Errc::InvalidParameter, "a must not be a nonpositive integer, got " + std::to_string(a));
  const double nn = n;
  const double half_a = 0.5 * a;
  double log_term = 0.0;
  int sign = 1;
  double sum = 1.0;
  for (unsigned j = 0; j < n; ++j) {
    const double jj = j;
    const double ratio = (-nn + jj) * (0.5 + jj) * (half_a + jj) /
                         ((-nn + 0.5 + jj) * (half_a + 1.0 + jj) * (jj + 1.0));
    if (ratio == 0.0) break;
    if (ratio < 0.0) sign = -sign;
    log_term += std::log(std::abs(ratio));
    sum += sign * std::exp(log_term);
  }
  return sum;
}

}  // namespace rflight
