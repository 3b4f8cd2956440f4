#include "rflight/charfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rflight/arctan_series.hpp"
#include "rflight/specfun.hpp"

namespace rflight {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);

double taylor_limit(int switches, double x) { return 1.0 - x * x / (3.0 * (switches + 2)); }

double reduced_frequency(const FreqQuery& q, const FlightParams& p) {
  return p.c() * q.t * q.alpha_norm;
}

void check_query(const FreqQuery& q) { (void)make_query(q.alpha_norm, q.t); }

template <class Term>
double sum_bessel_series(double x, const SeriesTruncation& trunc, const char* name, Term term) {
  double sum = 0.0;
  for (int k = 0; k < trunc.max_terms; ++k) {
    const double value = term(static_cast<unsigned>(k));
    sum += value;
    if (k >= x && std::abs(value) < trunc.tail_tol) return sum;
  }
  throw Error(Errc::TruncationNotConverged,
              std::string(name) + " tail above " + std::to_string(trunc.tail_tol) + " after " +
                  std::to_string(trunc.max_terms) + " terms at c t |alpha| = " + std::to_string(x));
}

}  // namespace

FreqQuery make_query(double alpha_norm, double t) {
  if (!std::isfinite(alpha_norm) || !(alpha_norm >= 0.0))
    throw Error(Errc::DomainError, "alpha_norm must be finite and >= 0");
  if (!std::isfinite(t) || !(t > 0.0)) throw Error(Errc::DomainError, "t must be finite and > 0");
  return FreqQuery{alpha_norm, t};
}

double h0(const FreqQuery& q, const FlightParams& p) {
  check_query(q);
  const double x = reduced_frequency(q, p);
  if (x == 0.0) return 1.0;
  if (x < kSmallArgument) return taylor_limit(0, x);
  return std::sin(x) / x;
}

double h1(const FreqQuery& q, const FlightParams& p) {
  check_query(q);
  const double x = reduced_frequency(q, p);
  if (x < kSmallArgument) return taylor_limit(1, x);
  return (std::sin(x) * si(2.0 * x) + std::cos(x) * ci_paper(2.0 * x)) / (x * x);
}

double h2_series(const FreqQuery& q, const FlightParams& p, const SeriesTruncation& trunc) {
  check_query(q);
  const double x = reduced_frequency(q, p);
  if (x < kSmallArgument) return taylor_limit(2, x);
  const double log_x = std::log(x);
  return sum_bessel_series(x, trunc, "h2_series", [&](unsigned k) {
    const double kk = k;
    const double log_coef = (kk - 1.0) * (log_x - kLog2) - std::lgamma(kk + 1.0) -
                            2.0 * std::log(2.0 * kk + 1.0);
    const double bessel = bessel_j(BesselOrder::integer(k + 1), x);
    if (bessel == 0.0) return 0.0;
    return std::exp(log_coef) * hyp5f4_unit(k) * bessel;
  });
}

double h3_series(const FreqQuery& q, const FlightParams& p, const SeriesTruncation& trunc) {
  check_query(q);
  const double x = reduced_frequency(q, p);
  if (x < kSmallArgument) return taylor_limit(3, x);
  const double log_x = std::log(x);
  const double front = 3.0 * std::pow(kPi, 1.5);
  return front * sum_bessel_series(x, trunc, "h3_series", [&](unsigned k) {
           const double kk = k;
           const double log_coef = (kk - 1.5) * log_x - (kk + 1.5) * kLog2 - std::lgamma(kk + 2.0);
           const double bessel = bessel_j(BesselOrder::half(k + 1), x);
           if (bessel == 0.0) return 0.0;
           return quartic_gamma(k) * std::exp(log_coef) * bessel;
         });
}

double h_asymptotic(const FreqQuery& q, const FlightParams& p) {
  check_query(q);
  const double lt = p.lambda() * q.t;
  const double x = reduced_frequency(q, p);
  const double decay = std::exp(-lt);
  if (x < kSmallArgument) {
    // Limits of 2 J_1(x)/x and 3 (sin x - x cos x)/x^3 are 1 - x^2/8, 1 - x^2/10.
    return decay * (taylor_limit(0, x) + lt * taylor_limit(1, x) +
                    lt * lt / 2.0 * (1.0 - x * x / 8.0) +
                    lt * lt * lt / 6.0 * (1.0 - x * x / 10.0));
  }
  const double lambda = p.lambda();
  const double t = q.t;
  const double ca = p.c() * q.alpha_norm;
  const double no_switch = std::sin(x) / x;
  const double one_switch =
      lambda / (p.c() * ca * t * q.alpha_norm) * (std::sin(x) * si(2.0 * x) + std::cos(x) * ci_paper(2.0 * x));
  const double two_switch = lambda * lambda * t / ca * bessel_j(BesselOrder::integer(1), x);
  const double three_switch = lambda * lambda * lambda * std::sqrt(kPi) * std::pow(t, 1.5) /
                              std::pow(2.0 * ca, 1.5) * bessel_j(BesselOrder::half(1), x);
  return decay * (no_switch + one_switch + two_switch + three_switch);
}

double h_mixture_through_three(const FreqQuery& q, const FlightParams& p,
                               const SeriesTruncation& trunc) {
  const double lt = p.lambda() * q.t;
  return std::exp(-lt) * (h0(q, p) + lt * h1(q, p) + lt * lt / 2.0 * h2_series(q, p, trunc) +
                          lt * lt * lt / 6.0 * h3_series(q, p, trunc));
}

}  // namespace rflight
