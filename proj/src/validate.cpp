#include "rflight/validate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>

#include "rflight/arctan_series.hpp"
#include "rflight/charfun.hpp"
#include "rflight/csv.hpp"
#include "rflight/density.hpp"
#include "rflight/montecarlo.hpp"
#include "rflight/quadrature.hpp"
#include "rflight/specfun.hpp"

namespace rflight {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_time(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) throw Error(Errc::DomainError, "t must be finite and > 0");
}

void check_tol(double tol) {
  if (!std::isfinite(tol) || !(tol > 0.0)) throw Error(Errc::InvalidParameter, "tol must be > 0");
}

// integral over theta in [theta0, theta1] of 4 pi r^2 g(r) * ct cos(theta), r = ct sin(theta)
template <class RadialFn>
double integrate_in_angle(double theta0, double theta1, double ct, double tol, RadialFn g) {
  const auto integrand = [&](double theta) {
    const double r = ct * std::sin(theta);
    return 4.0 * kPi * r * r * g(r) * ct * std::cos(theta);
  };
  return quad::integrate(integrand, theta0, theta1, tol, 20000).value;
}

// Shortest round-trip form, for check names.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string label(const std::string& base, double t) {
  return base + " t=" + fmt(t);
}

}  // namespace

CheckReport make_check(std::string name, double lhs, double rhs, double tolerance, std::string detail) {
  const bool passed = std::abs(lhs - rhs) <= tolerance;
  return CheckReport{std::move(name), lhs, rhs, tolerance, passed, std::move(detail)};
}

AcMass integrate_ac_terms(double t, const FlightParams& p, double tol) {
  check_time(t);
  check_tol(tol);
  const double ct = p.reach(t);
  AcMass mass;
  mass.one_switch = integrate_in_angle(0.0, kHalfPi, ct, tol, [&](double r) {
    return ac_density_terms(r, t, p).one_switch;
  });
  mass.two_switch = integrate_in_angle(0.0, kHalfPi, ct, tol, [&](double r) {
    return ac_density_terms(r, t, p).two_switch;
  });
  mass.three_switch = integrate_in_angle(0.0, kHalfPi, ct, tol, [&](double r) {
    return ac_density_terms(r, t, p).three_switch;
  });
  return mass;
}

double integrate_ac_density(double t, const FlightParams& p, double tol) {
  check_time(t);
  check_tol(tol);
  return integrate_in_angle(0.0, kHalfPi, p.reach(t), tol, [&](double r) { return ac_density(r, t, p); });
}

double integrate_ac_density_shell(double r0, double r1, double t, const FlightParams& p, double tol) {
  check_time(t);
  check_tol(tol);
  const double ct = p.reach(t);
  if (!(r0 >= 0.0) || !(r1 >= r0)) throw Error(Errc::DomainError, "need 0 <= r0 <= r1");
  if (r1 > ct) throw Error(Errc::RadiusOutsideBall, "r1 must not exceed c t");
  const double theta0 = std::asin(r0 / ct);
  const double theta1 = r1 == ct ? kHalfPi : std::asin(r1 / ct);
  return integrate_in_angle(theta0, theta1, ct, tol, [&](double r) { return ac_density(r, t, p); });
}

double integrate_ac_density_ball(double r, double t, const FlightParams& p, double tol) {
  check_time(t);
  if (!(r > 0.0)) throw Error(Errc::DomainError, "r must be > 0");
  if (r >= p.reach(t)) throw Error(Errc::RadiusOutsideBall, "r must be below c t");
  return integrate_ac_density_shell(0.0, r, t, p, tol);
}

double ks_statistic_uniform(std::vector<double>& sample, double lo, double hi) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = std::clamp((sample[i] - lo) / (hi - lo), 0.0, 1.0);
    d = std::max({d, (i + 1) / n - cdf, cdf - i / n});
  }
  return d;
}

double ks_critical_1pct(std::uint64_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

double chi_square_critical(double alpha, int dof) {
  const boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

std::vector<CheckReport> run_suite(const FlightParams& p, const SuiteOptions& options) {
  std::vector<CheckReport> out;
  const SeriesTruncation& trunc = options.trunc;
  const double tol = options.tol;
  const double lambda = p.lambda();

  // Power series of arctan^n against the library arctan.
  for (int n = 1; n <= 4; ++n) {
    double worst = 0.0;
    for (int i = -30; i <= 30; ++i) {
      const double z = 0.1 * i;
      worst = std::max(worst, std::abs(arctan_pow(n, z, trunc) - std::pow(std::atan(z), n)));
    }
    out.push_back(make_check("arctan_pow n=" + std::to_string(n) + " on z in [-3,3]", worst, 0.0, 1e-10,
                             "max abs deviation from atan(z)^n"));
  }
  {
    double worst = 0.0;
    for (unsigned n = 0; n <= 20; ++n)
      for (double a : {0.5, 1.0, 2.0, 3.5}) {
        const auto [lhs, rhs] = lemma_a1_check(n, a);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
    out.push_back(make_check("gamma-sum identity n<=20", worst, 0.0, 1e-11, "max relative gap"));
  }
  out.push_back(make_check("hyp5f4_unit(0)", hyp5f4_unit(0), 1.0, 0.0));
  out.push_back(make_check("hyp5f4_unit(1)", hyp5f4_unit(1), 3.0, 1e-15));
  out.push_back(make_check("quartic_gamma(0)", quartic_gamma(0), 2.0 / kPi, 1e-14));

  const std::vector<double> alphas{0.5, 1.0, 2.0, 4.0};
  for (double t : options.t_list) {
    const double lt = lambda * t;
    const double budget = 5.0 * t * t * t;
    out.push_back(make_check(label("h_asymptotic at alpha=0", t), h_asymptotic(make_query(0.0, t), p),
                             std::exp(-lt) * (1.0 + lt + lt * lt / 2.0 + lt * lt * lt / 6.0), 1e-15));
    for (double a : alphas) {
      const auto q = make_query(a, t);
      out.push_back(make_check(label("h_asymptotic vs conditional mixture |alpha|=" + fmt(a), t),
                               h_asymptotic(q, p), h_mixture_through_three(q, p, trunc), budget,
                               "tolerance 5 t^3"));
    }

    const AcMass mass = integrate_ac_terms(t, p, tol);
    out.push_back(make_check(label("a.c. mass one switch", t), mass.one_switch, lt, 1e-8));
    out.push_back(make_check(label("a.c. mass two switches", t), mass.two_switch, lt * lt / 2.0, 1e-8));
    out.push_back(make_check(label("a.c. mass three switches", t), mass.three_switch, lt * lt * lt / 6.0, 1e-8));
    out.push_back(make_check(label("integrate_ac_density vs g_tilde", t), integrate_ac_density(t, p, tol),
                             g_tilde(t, p), 1e-6));

    const double ct = p.reach(t);
    for (double frac : {0.2, 0.5, 0.8, 0.95}) {
      const double r = frac * ct;
      out.push_back(make_check(label("ball probability series vs quadrature r/ct=" + fmt(frac), t),
                               ball_prob_asymptotic(r, t, p, trunc), integrate_ac_density_ball(r, t, p, tol),
                               1e-6));
    }
    const SeriesTruncation long_series{10'000, trunc.tail_tol};
    out.push_back(make_check(label("ball probability limit r->ct", t),
                             ball_prob_asymptotic(ct * (1.0 - 1e-15), t, p, long_series), g_tilde(t, p), 1e-8));
    out.push_back(make_check(label("gap g_exact - g_tilde vs Poisson tail", t), g_exact(t, p) - g_tilde(t, p),
                             switch_tail_error(t, p), 1e-15));

    const double origin = std::exp(-lt) * (lambda / (2.0 * kPi * p.c() * p.c() * p.c() * t * t) +
                                           lambda * lambda / (2.0 * kPi * kPi * p.c() * p.c() * ct) +
                                           lambda * lambda * lambda / (8.0 * kPi * p.c() * p.c() * p.c()));
    out.push_back(make_check(label("ac_density at origin", t), ac_density(0.0, t, p), origin, 1e-12 * origin));
    out.push_back(make_check(label("ac_density continuous at origin", t), ac_density(1e-6 * ct, t, p),
                             ac_density(0.0, t, p), 1e-9 * origin));
  }

  // Accuracy windows read off the G / G~ curves.
  const std::vector<std::pair<double, double>> windows{{1.0, 0.7}, {1.5, 0.5}, {2.0, 0.4}, {2.5, 0.3}};
  for (const auto& [lam, t] : windows) {
    const FlightParams q = validate_params(p.c(), lam);
    out.push_back(make_check("gap below 0.01 at lambda=" + fmt(lam) + " t=" + fmt(t), switch_tail_error(t, q), 0.0,
                             0.01));
  }

  if (options.quick) return out;

  McConfig mc = options.mc;
  const double t_mid = options.t_list[options.t_list.size() / 2];
  const double ct_mid = p.reach(t_mid);
  std::uint64_t stream = 0;
  auto next_cfg = [&] {
    McConfig cfg = mc;
    cfg.seed = mc.seed + 7919 * (++stream);
    return cfg;
  };

  for (unsigned n = 1; n <= 3; ++n) {
    for (double x : {0.3, 0.5, 1.0, 2.0, 3.0}) {
      const auto q = make_query(x / ct_mid, t_mid);
      const double analytic = n == 1 ? h1(q, p) : n == 2 ? h2_series(q, p, trunc) : h3_series(q, p, trunc);
      const CfEstimate mcv = estimate_conditional_cf(n, q.alpha_norm, t_mid, p, next_cfg());
      out.push_back(make_check("H" + std::to_string(n) + " vs conditional MC ct|alpha|=" + fmt(x), analytic,
                               mcv.real.mean, 3.0 * mcv.real.std_error, "tolerance 3 std errors"));
      out.push_back(make_check("H" + std::to_string(n) + " imaginary part ct|alpha|=" + fmt(x), mcv.imag.mean, 0.0,
                               3.0 * mcv.imag.std_error, "symmetry"));
    }
  }

  for (double t : options.t_list) {
    const double budget = 5.0 * t * t * t;
    for (double a : alphas) {
      const CfEstimate mcv = estimate_cf(a, t, p, next_cfg());
      out.push_back(make_check(label("h_asymptotic vs MC |alpha|=" + fmt(a), t), h_asymptotic(make_query(a, t), p),
                               mcv.real.mean, 3.0 * mcv.real.std_error + budget, "3 std errors + 5 t^3"));
    }
  }

  {
    const auto cfg = next_cfg();
    const RadialHistogram h = radial_histogram(t_mid, p, cfg, 10);
    const double atom = singular_weight(t_mid, p);
    const double se = std::sqrt(atom * (1.0 - atom) / static_cast<double>(cfg.samples));
    out.push_back(make_check("atom fraction vs exp(-lambda t)", h.atom_mass, atom, 3.0 * se));
    const double budget = 5.0 * t_mid * t_mid * t_mid;
    // Outermost bin touches r = ct, where the asymptotic density is not uniform.
    for (std::size_t b = 0; b + 1 < h.mass.size(); ++b) {
      const double exact = integrate_ac_density_shell(h.edges[b], h.edges[b + 1], t_mid, p, tol);
      out.push_back(make_check("radial histogram bin " + std::to_string(b) + " vs quadrature", h.mass[b], exact,
                               3.0 * h.std_error[b] + budget, "3 std errors + 5 t^3"));
    }
  }
  {
    const double r = 0.5 * ct_mid;
    const McEstimate mcv = estimate_ball_prob(r, t_mid, p, next_cfg());
    out.push_back(make_check("ball probability vs MC r/ct=0.5", ball_prob_asymptotic(r, t_mid, p, trunc), mcv.mean,
                             3.0 * mcv.std_error + 5.0 * t_mid * t_mid * t_mid, "3 std errors + 5 t^3"));
  }
  out.push_back(make_check("support |X| <= ct", max_radius_ratio(t_mid, p, next_cfg()), 1.0, 1e-12,
                           "max |X|/(ct)"));
  {
    const auto cfg = next_cfg();
    const auto counts = switch_counts(t_mid, p, cfg, 4);
    const double lt = lambda * t_mid;
    std::vector<double> observed, expected;
    double pmf = std::exp(-lt);
    for (unsigned k = 0; k < 4; ++k) {
      observed.push_back(static_cast<double>(counts[k]));
      expected.push_back(pmf * static_cast<double>(cfg.samples));
      pmf *= lt / (k + 1);
    }
    observed.push_back(static_cast<double>(counts[4]));
    expected.push_back(switch_tail_error(t_mid, p) * static_cast<double>(cfg.samples));
    const double crit = chi_square_critical(0.01, 4);
    out.push_back(make_check("switch counts chi-square vs Poisson", chi_square_statistic(observed, expected), 0.0,
                             crit, "1% critical value"));
  }
  {
    const auto cfg = next_cfg();
    auto parts = map_chunks(cfg, [](std::uint64_t, Rng& rng, std::uint64_t count) {
      std::vector<double> z(count);
      for (auto& v : z) v = sample_direction(rng).x3;
      return z;
    });
    std::vector<double> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    out.push_back(make_check("direction colatitude KS vs uniform", ks_statistic_uniform(all, -1.0, 1.0), 0.0,
                             ks_critical_1pct(all.size()), "1% critical value"));
  }
  {
    McConfig one = next_cfg();
    one.workers = 1;
    McConfig many = one;
    many.workers = 4;
    const double a = estimate_cf(2.0, t_mid, p, one).real.mean;
    const double b = estimate_cf(2.0, t_mid, p, many).real.mean;
    out.push_back(make_check("determinism across worker counts", a, b, 0.0, "1 vs 4 workers"));
  }
  return out;
}

bool all_passed(std::span<const CheckReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

void write_text(std::ostream& out, std::span<const CheckReport> reports) {
  for (const auto& r : reports) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": lhs=" << csv::format_double(r.lhs)
        << " rhs=" << csv::format_double(r.rhs) << " tol=" << csv::format_double(r.tolerance);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const CheckReport> reports) {
  csv::write_row(out, {"name", "lhs", "rhs", "tolerance", "passed"});
  for (const auto& r : reports) {
    std::string name = r.name;
    std::replace(name.begin(), name.end(), ',', ';');
    csv::write_row(out, {name, csv::format_double(r.lhs), csv::format_double(r.rhs),
                         csv::format_double(r.tolerance), r.passed ? "true" : "false"});
  }
}

}  // namespace rflight
