#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rflight/csv.hpp"
#include "rflight/density.hpp"
#include "rflight/montecarlo.hpp"
#include "rflight/validate.hpp"

namespace rflight::cli {
namespace {

using csv::format_double;

struct RunSpec {
  std::string command;
  double c = 5.0;
  double lambda = 2.0;
  double t = 0.1;
  double tmin = 0.0;
  double tmax = 1.0;
  double rmax = std::numeric_limits<double>::quiet_NaN();
  int points = 0;
  int bins = 50;
  std::uint64_t samples = 0;
  std::uint64_t seed = 20160701;
  unsigned workers = 0;
  int terms = 200;
  double tol = 1e-10;
  std::string output;
  bool raw = false;
  bool quick = false;
  bool csv = false;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_spec(std::ostream& err, const RunSpec& s) {
  err << "command=" << s.command << " c=" << s.c << " lambda=" << s.lambda << " t=" << s.t << " tmin=" << s.tmin
      << " tmax=" << s.tmax << " rmax=" << s.rmax << " points=" << s.points << " bins=" << s.bins
      << " samples=" << s.samples << " seed=" << s.seed << " workers=" << s.workers << " terms=" << s.terms
      << " tol=" << s.tol << " output=" << (s.output.empty() ? "-" : s.output) << " raw=" << s.raw
      << " quick=" << s.quick << '\n';
}

FlightParams params_or_usage(double c, double lambda) {
  try {
    return validate_params(c, lambda);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void density_profile(const RunSpec& s, std::ostream& out) {
  const FlightParams p = params_or_usage(s.c, s.lambda);
  if (!(s.t > 0.0)) throw UsageError("--t must be > 0");
  const double ct = p.reach(s.t);
  const double rmax = std::isnan(s.rmax) ? ct : s.rmax;
  if (!(rmax > 0.0) || rmax > ct)
    throw UsageError("--rmax must lie in (0, c t] = (0, " + format_double(ct) + "]");
  if (s.points < 2) throw UsageError("--points must be >= 2");
  // Half-open grid [0, rmax): the last point stays strictly inside the ball.
  const double last = rmax * (s.points - 1) / s.points;
  const RadialProfile profile = radial_profile(s.t, p, s.points, last);
  csv::write_row(out, {"r", "ac_density"});
  for (std::size_t i = 0; i < profile.radii.size(); ++i)
    csv::write_row(out, {format_double(profile.radii[i]), format_double(profile.values[i])});
}

void gcurves(const RunSpec& s, bool lambda_given, std::ostream& out) {
  if (!(s.tmin >= 0.0) || !(s.tmax > s.tmin)) throw UsageError("need 0 <= --tmin < --tmax");
  if (s.points < 1) throw UsageError("--points must be >= 1");
  const std::vector<double> lambdas = lambda_given ? std::vector<double>{s.lambda} : std::vector<double>{1.0, 1.5, 2.0, 2.5};
  csv::write_row(out, {"lambda", "t", "g_exact", "g_tilde", "gap"});
  for (double lam : lambdas) {
    const FlightParams p = params_or_usage(s.c, lam);
    for (int i = 1; i <= s.points; ++i) {
      const double t = s.tmin + (s.tmax - s.tmin) * i / s.points;
      const double g = g_exact(t, p);
      const double gt = g_tilde(t, p);
      csv::write_row(out, {format_double(lam), format_double(t), format_double(g), format_double(gt),
                           format_double(g - gt)});
    }
  }
}

McConfig mc_config(const RunSpec& s) {
  McConfig cfg;
  cfg.samples = s.samples;
  cfg.seed = s.seed;
  cfg.workers = s.workers;
  return cfg;
}

void simulate(const RunSpec& s, std::ostream& out) {
  const FlightParams p = params_or_usage(s.c, s.lambda);
  if (!(s.t > 0.0)) throw UsageError("--t must be > 0");
  if (s.samples < 1) throw UsageError("--samples must be >= 1");
  if (s.bins < 1) throw UsageError("--bins must be >= 1");
  const McConfig cfg = mc_config(s);
  if (s.raw) {
    csv::write_row(out, {"x1", "x2", "x3", "n_switches"});
    for (const auto& sample : sample_paths(s.t, p, cfg)) {
      csv::write_row(out, {format_double(sample.position.x1), format_double(sample.position.x2),
                           format_double(sample.position.x3), std::to_string(sample.n_switches)});
    }
    return;
  }
  const RadialHistogram h = radial_histogram(s.t, p, cfg, s.bins);
  csv::write_row(out, {"r_lo", "r_hi", "mass"});
  for (std::size_t b = 0; b < h.mass.size(); ++b)
    csv::write_row(out, {format_double(h.edges[b]), format_double(h.edges[b + 1]), format_double(h.mass[b])});
  csv::write_row(out, {"atom", format_double(h.atom_mass)});
}

int validate_cmd(const RunSpec& s, bool t_given, std::ostream& out) {
  const FlightParams p = params_or_usage(s.c, s.lambda);
  SuiteOptions options;
  if (t_given) {
    if (!(s.t > 0.0)) throw UsageError("--t must be > 0");
    options.t_list = {s.t};
  }
  if (s.samples < 10'000) throw UsageError("--samples must be >= 10000");
  options.mc = mc_config(s);
  try {
    options.trunc = validate_truncation(s.terms, options.trunc.tail_tol);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  options.tol = s.tol;
  options.quick = s.quick;
  const auto reports = run_suite(p, options);
  if (s.csv)
    write_csv(out, reports);
  else
    write_text(out, reports);
  return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-dimensional Markov random flight: densities, accuracy curves, simulation, validation"};
  app.require_subcommand(1);
  RunSpec s;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--c", s.c, "Speed")->capture_default_str();
    cmd->add_option("--seed", s.seed, "Random seed")->capture_default_str();
    cmd->add_option("--output", s.output, "Output file (default stdout)");
    cmd->add_flag("--verbose", s.verbose, "Print the resolved run spec to stderr");
  };

  auto* profile = app.add_subcommand("density-profile", "Radial profile of the absolutely continuous density");
  common(profile);
  profile->add_option("--lambda", s.lambda, "Switching intensity")->capture_default_str();
  profile->add_option("--t", s.t, "Time")->capture_default_str();
  profile->add_option("--rmax", s.rmax, "Grid end, exclusive (default c t)");
  auto* profile_points = profile->add_option("--points", s.points, "Grid points (default 500)");

  auto* curves = app.add_subcommand("gcurves", "Exact and approximate a.c. mass over time");
  common(curves);
  auto* curves_lambda = curves->add_option("--lambda", s.lambda, "Single intensity (default 1, 1.5, 2, 2.5)");
  curves->add_option("--tmin", s.tmin, "Start of time range, exclusive")->capture_default_str();
  curves->add_option("--tmax", s.tmax, "End of time range")->capture_default_str();
  auto* curves_points = curves->add_option("--points", s.points, "Time points (default 200)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo radial histogram or raw positions");
  common(sim);
  sim->add_option("--lambda", s.lambda, "Switching intensity")->capture_default_str();
  sim->add_option("--t", s.t, "Time")->capture_default_str();
  auto* sim_samples = sim->add_option("--samples", s.samples, "Sample count (default 100000)");
  sim->add_option("--bins", s.bins, "Histogram bins")->capture_default_str();
  sim->add_option("--workers", s.workers, "Worker threads (0 = all cores)");
  sim->add_flag("--raw", s.raw, "Emit raw positions instead of a histogram");

  auto* val = app.add_subcommand("validate", "Run the cross-check suite");
  common(val);
  val->add_option("--lambda", s.lambda, "Switching intensity")->capture_default_str();
  auto* val_t = val->add_option("--t", s.t, "Single time (default 0.05, 0.1, 0.2)");
  auto* val_samples = val->add_option("--samples", s.samples, "Monte Carlo samples per check (default 1000000)");
  val->add_option("--terms", s.terms, "Series term budget")->capture_default_str();
  val->add_option("--tol", s.tol, "Quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  val->add_option("--workers", s.workers, "Worker threads (0 = all cores)");
  val->add_flag("--quick", s.quick, "Skip Monte Carlo checks");
  val->add_flag("--csv", s.csv, "CSV report instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  s.command = chosen->get_name();
  if (chosen == profile && profile_points->count() == 0) s.points = 500;
  if (chosen == curves && curves_points->count() == 0) s.points = 200;
  if (chosen == sim && sim_samples->count() == 0) s.samples = 100'000;
  if (chosen == val && val_samples->count() == 0) s.samples = 1'000'000;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.output.empty()) {
    file.open(s.output, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open " << s.output << '\n';
      return kExitUsage;
    }
    sink = &file;
  }
  if (s.verbose) print_spec(err, s);

  try {
    if (chosen == profile) density_profile(s, *sink);
    if (chosen == curves) gcurves(s, curves_lambda->count() > 0, *sink);
    if (chosen == sim) simulate(s, *sink);
    if (chosen == val) return validate_cmd(s, val_t->count() > 0, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace rflight::cli
