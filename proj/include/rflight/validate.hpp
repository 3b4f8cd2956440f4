#pragma once

// Quadrature of the density and the battery of cross-checks that pair every
// closed form with an independent route: series against quadrature, the
// characteristic functions against Monte Carlo, masses against the exact
// switching law.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rflight/model.hpp"

namespace rflight {

struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // |lhs - rhs| <= tolerance
  std::string detail;
};

CheckReport make_check(std::string name, double lhs, double rhs, double tolerance,
                       std::string detail = {});

/// Integrals over the ball of the three bracket terms (no e^{-lambda t}).
/// Exact values are lambda t, (lambda t)^2 / 2 and (lambda t)^3 / 6.
struct AcMass {
  double one_switch = 0.0;
  double two_switch = 0.0;
  double three_switch = 0.0;
};

AcMass integrate_ac_terms(double t, const FlightParams& p, double tol);

/// integral_0^{ct} 4 pi r^2 ac_density(r) dr. The substitution r = c t sin(theta)
/// removes the inverse square root at the boundary; the log singularity left
/// behind is integrable and handled by bisection.
double integrate_ac_density(double t, const FlightParams& p, double tol);

/// integral_0^{r} 4 pi rho^2 ac_density(rho) d rho for 0 < r < c t.
double integrate_ac_density_ball(double r, double t, const FlightParams& p, double tol);

/// Same over the shell [r0, r1], 0 <= r0 <= r1 <= c t.
double integrate_ac_density_shell(double r0, double r1, double t, const FlightParams& p, double tol);

/// Kolmogorov-Smirnov distance of a sample to Uniform[lo, hi]. Sorts in place.
double ks_statistic_uniform(std::vector<double>& sample, double lo, double hi);

/// Asymptotic 1% critical value of the one-sample KS distance.
double ks_critical_1pct(std::uint64_t n);

/// Pearson statistic sum (obs - exp)^2 / exp.
double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);

/// Upper quantile of the chi-square law: P(X > q) = alpha.
double chi_square_critical(double alpha, int dof);

struct SuiteOptions {
  std::vector<double> t_list{0.05, 0.1, 0.2};
  McConfig mc{};
  SeriesTruncation trunc{};
  double tol = 1e-10;  // quadrature tolerance
  bool quick = false;  // skip Monte Carlo checks
};

/// Runs every pairing and returns one report per check, in a fixed order.
std::vector<CheckReport> run_suite(const FlightParams& p, const SuiteOptions& options);

bool all_passed(std::span<const CheckReport> reports);

/// One line per report: PASS/FAIL, name, lhs, rhs, tolerance, detail.
void write_text(std::ostream& out, std::span<const CheckReport> reports);

/// Header `name,lhs,rhs,tolerance,passed`.
void write_csv(std::ostream& out, std::span<const CheckReport> reports);

}  // namespace rflight
