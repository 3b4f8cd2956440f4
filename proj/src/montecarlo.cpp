#include "rflight/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rflight {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_time(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) throw Error(Errc::DomainError, "t must be finite and > 0");
}

void check_cf_samples(const McConfig& cfg) {
  if (cfg.samples < 10'000)
    throw Error(Errc::InvalidParameter, "characteristic function estimates need >= 10^4 samples");
}

// Position accumulator: sum of c * duration * direction over the segments.
void advance(Vec3& pos, double length, const Vec3& dir) {
  pos.x1 += length * dir.x1;
  pos.x2 += length * dir.x2;
  pos.x3 += length * dir.x3;
}

template <class Sampler>
CfEstimate cf_from_first_coordinate(double alpha_norm, const McConfig& cfg, Sampler sampler) {
  struct Parts {
    Moments re;
    Moments im;
  };
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    std::vector<double> re(count);
    std::vector<double> im(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double phase = alpha_norm * sampler(rng).x1;
      re[i] = std::cos(phase);
      im[i] = std::sin(phase);
    }
    return Parts{Moments::of(re), Moments::of(im)};
  });
  std::vector<Moments> re, im;
  re.reserve(parts.size());
  im.reserve(parts.size());
  for (const auto& part : parts) {
    re.push_back(part.re);
    im.push_back(part.im);
  }
  return CfEstimate{reduce_moments(re).estimate(), reduce_moments(im).estimate()};
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t chunk_index) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state ^= chunk_index * 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(state);
  const std::uint64_t c = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(chunk_index), static_cast<std::uint32_t>(chunk_index >> 32)};
  return Rng(seq);
}

Vec3 sample_direction(Rng& rng) {
  const double u = 2.0 * uniform01(rng) - 1.0;
  const double phi = kTwoPi * uniform01(rng);
  const double s = std::sqrt((1.0 - u) * (1.0 + u));
  return Vec3{s * std::cos(phi), s * std::sin(phi), u};
}

PathSample sample_position(double t, const FlightParams& p, Rng& rng) {
  PathSample sample;
  double remaining = t;
  for (;;) {
    const Vec3 dir = sample_direction(rng);
    const double hold = -std::log1p(-uniform01(rng)) / p.lambda();
    if (hold >= remaining) {
      advance(sample.position, p.c() * remaining, dir);
      return sample;
    }
    advance(sample.position, p.c() * hold, dir);
    remaining -= hold;
    ++sample.n_switches;
  }
}

Vec3 sample_position_given_n(unsigned n, double t, const FlightParams& p, Rng& rng) {
  std::vector<double> epochs(n + 2);
  epochs.front() = 0.0;
  epochs.back() = t;
  for (unsigned i = 1; i <= n; ++i) epochs[i] = t * uniform01(rng);
  std::sort(epochs.begin() + 1, epochs.end() - 1);
  Vec3 pos;
  for (unsigned i = 0; i <= n; ++i) advance(pos, p.c() * (epochs[i + 1] - epochs[i]), sample_direction(rng));
  return pos;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Moments Moments::of(std::span<const double> values) {
  Moments m;
  m.n = values.size();
  if (m.n == 0) return m;
  m.mean = pairwise_sum(values) / static_cast<double>(m.n);
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - m.mean;
    sq[i] = d * d;
  }
  m.m2 = pairwise_sum(sq);
  return m;
}

Moments Moments::merge(const Moments& a, const Moments& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  const double na = static_cast<double>(a.n);
  const double nb = static_cast<double>(b.n);
  const double n = na + nb;
  const double delta = b.mean - a.mean;
  Moments m;
  m.n = a.n + b.n;
  m.mean = (na * a.mean + nb * b.mean) / n;
  m.m2 = a.m2 + b.m2 + delta * delta * na * nb / n;
  return m;
}

McEstimate Moments::estimate() const {
  McEstimate e;
  e.samples = n;
  e.mean = mean;
  e.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
  return e;
}

Moments reduce_moments(std::span<const Moments> parts) {
  if (parts.empty()) return Moments{};
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  return Moments::merge(reduce_moments(parts.first(half)), reduce_moments(parts.subspan(half)));
}

CfEstimate estimate_cf(double alpha_norm, double t, const FlightParams& p, const McConfig& cfg) {
  check_time(t);
  check_cf_samples(cfg);
  return cf_from_first_coordinate(alpha_norm, cfg,
                                  [&](Rng& rng) { return sample_position(t, p, rng).position; });
}

CfEstimate estimate_conditional_cf(unsigned n, double alpha_norm, double t, const FlightParams& p,
                                   const McConfig& cfg) {
  check_time(t);
  check_cf_samples(cfg);
  return cf_from_first_coordinate(alpha_norm, cfg,
                                  [&](Rng& rng) { return sample_position_given_n(n, t, p, rng); });
}

McEstimate estimate_ball_prob(double r, double t, const FlightParams& p, const McConfig& cfg) {
  check_time(t);
  check_config(cfg);
  if (!(r >= 0.0)) throw Error(Errc::DomainError, "r must be >= 0");
  if (r >= p.reach(t)) return McEstimate{1.0, 0.0, cfg.samples};
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    std::vector<double> inside(count);
    for (std::uint64_t i = 0; i < count; ++i)
      inside[i] = norm(sample_position(t, p, rng).position) <= r ? 1.0 : 0.0;
    return Moments::of(inside);
  });
  return reduce_moments(parts).estimate();
}

RadialHistogram radial_histogram(double t, const FlightParams& p, const McConfig& cfg, int bins,
                                 std::optional<unsigned> condition) {
  check_time(t);
  if (bins < 1) throw Error(Errc::InvalidParameter, "bins must be >= 1");
  const double ct = p.reach(t);
  const auto nb = static_cast<std::size_t>(bins);
  // Slot nb holds the atom.
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    std::vector<std::uint64_t> counts(nb + 1, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      Vec3 pos;
      unsigned switches = 0;
      if (condition) {
        switches = *condition;
        pos = sample_position_given_n(switches, t, p, rng);
      } else {
        const PathSample s = sample_position(t, p, rng);
        pos = s.position;
        switches = s.n_switches;
      }
      if (switches == 0) {
        ++counts[nb];
        continue;
      }
      const double frac = norm(pos) / ct;
      const auto bin = std::min(nb - 1, static_cast<std::size_t>(frac * static_cast<double>(nb)));
      ++counts[bin];
    }
    return counts;
  });
  std::vector<std::uint64_t> total(nb + 1, 0);
  for (const auto& part : parts)
    for (std::size_t b = 0; b <= nb; ++b) total[b] += part[b];

  RadialHistogram h;
  h.samples = cfg.samples;
  const double n = static_cast<double>(cfg.samples);
  h.edges.resize(nb + 1);
  for (std::size_t b = 0; b <= nb; ++b) h.edges[b] = b == nb ? ct : ct * static_cast<double>(b) / static_cast<double>(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const double frac = static_cast<double>(total[b]) / n;
    h.mass.push_back(frac);
    const double var = n > 1 ? frac * (1.0 - frac) * n / (n - 1.0) : 0.0;
    h.std_error.push_back(std::sqrt(var / n));
  }
  h.atom_mass = static_cast<double>(total[nb]) / n;
  return h;
}

std::vector<std::uint64_t> switch_counts(double t, const FlightParams& p, const McConfig& cfg,
                                         unsigned max_count) {
  check_time(t);
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    std::vector<std::uint64_t> counts(max_count + 1, 0);
    for (std::uint64_t i = 0; i < count; ++i)
      ++counts[std::min(max_count, sample_position(t, p, rng).n_switches)];
    return counts;
  });
  std::vector<std::uint64_t> total(max_count + 1, 0);
  for (const auto& part : parts)
    for (unsigned k = 0; k <= max_count; ++k) total[k] += part[k];
  return total;
}

double max_radius_ratio(double t, const FlightParams& p, const McConfig& cfg) {
  check_time(t);
  const double ct = p.reach(t);
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < count; ++i)
      worst = std::max(worst, norm(sample_position(t, p, rng).position) / ct);
    return worst;
  });
  return *std::max_element(parts.begin(), parts.end());
}

std::vector<PathSample> sample_paths(double t, const FlightParams& p, const McConfig& cfg) {
  check_time(t);
  const auto parts = map_chunks(cfg, [&](std::uint64_t, Rng& rng, std::uint64_t count) {
    std::vector<PathSample> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_position(t, p, rng));
    return out;
  });
  std::vector<PathSample> all;
  all.reserve(cfg.samples);
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace rflight
