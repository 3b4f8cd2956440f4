#pragma once

// Exact simulation of the random flight. Every estimator is a deterministic
// function of (McConfig, FlightParams, query): samples are split into chunks,
// chunk i draws from its own stream seeded by (seed, i), and partial results
// are reduced in chunk order, so the worker count never changes the output.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "rflight/model.hpp"

namespace rflight {

using Rng = std::mt19937_64;

/// Independent stream for one chunk.
Rng make_stream(std::uint64_t seed, std::uint64_t chunk_index);

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform direction on the unit sphere (cos-uniform colatitude).
Vec3 sample_direction(Rng& rng);

struct PathSample {
  Vec3 position;
  unsigned n_switches = 0;
};

/// Position at time t: exponential(lambda) holding times, a fresh uniform
/// direction after each switch.
PathSample sample_position(double t, const FlightParams& p, Rng& rng);

/// Position at time t given exactly n switches; the switch epochs are the
/// order statistics of n uniforms on (0, t).
Vec3 sample_position_given_n(unsigned n, double t, const FlightParams& p, Rng& rng);

/// Running (count, mean, M2) triple; merge() is Chan's pairwise update.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  static Moments of(std::span<const double> values);
  static Moments merge(const Moments& a, const Moments& b);
  McEstimate estimate() const;
};

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Reduces chunk partials with a balanced tree in chunk order.
Moments reduce_moments(std::span<const Moments> parts);

/// Runs fn(chunk_index, rng, count) for every chunk on cfg.workers threads and
/// returns the results indexed by chunk.
template <class Fn>
auto map_chunks(const McConfig& cfg, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::uint64_t, Rng&, std::uint64_t>> {
  using R = std::invoke_result_t<Fn&, std::uint64_t, Rng&, std::uint64_t>;
  check_config(cfg);
  const std::uint64_t chunks = (cfg.samples + cfg.chunk - 1) / cfg.chunk;
  std::vector<R> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= chunks) return;
      const std::uint64_t begin = i * cfg.chunk;
      const std::uint64_t count = std::min(cfg.chunk, cfg.samples - begin);
      try {
        Rng rng = make_stream(cfg.seed, i);
        results[i] = fn(i, rng, count);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Estimate of E[cos(alpha . X)] with its imaginary counterpart
/// E[sin(alpha . X)], which vanishes by symmetry.
struct CfEstimate {
  McEstimate real;
  McEstimate imag;
};

/// Empirical characteristic function at |alpha| (alpha along the first
/// axis). Requires cfg.samples >= 10^4.
CfEstimate estimate_cf(double alpha_norm, double t, const FlightParams& p, const McConfig& cfg);

/// Same, conditioned on exactly n switches.
CfEstimate estimate_conditional_cf(unsigned n, double alpha_norm, double t, const FlightParams& p,
                                   const McConfig& cfg);

/// Fraction of samples with |X| <= r. Exactly 1 for r >= c t.
McEstimate estimate_ball_prob(double r, double t, const FlightParams& p, const McConfig& cfg);

struct RadialHistogram {
  std::vector<double> edges;      // bins + 1 edges spanning [0, c t]
  std::vector<double> mass;       // interior (at least one switch) mass per bin
  std::vector<double> std_error;  // per-bin standard error
  double atom_mass = 0.0;         // fraction with no switch, on the sphere |x| = c t
  std::uint64_t samples = 0;
};

/// Radial histogram over [0, c t]. Unconditionally, masses plus atom sum to 1;
/// with `condition` set, samples are drawn given that many switches.
RadialHistogram radial_histogram(double t, const FlightParams& p, const McConfig& cfg, int bins,
                                 std::optional<unsigned> condition = std::nullopt);

/// Switch-count frequencies; the last bucket collects counts >= max_count.
std::vector<std::uint64_t> switch_counts(double t, const FlightParams& p, const McConfig& cfg,
                                         unsigned max_count);

/// max |X| / (c t) over all samples.
double max_radius_ratio(double t, const FlightParams& p, const McConfig& cfg);

/// Raw samples in chunk order.
std::vector<PathSample> sample_paths(double t, const FlightParams& p, const McConfig& cfg);

}  // namespace rflight
