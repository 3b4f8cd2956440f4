#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rflight {

enum class Errc {
  NonPositiveSpeed,
  NonPositiveIntensity,
  NonFinite,
  DomainError,
  InvalidParameter,
  UnsupportedPower,
  TruncationNotConverged,
  RadiusOutsideBall,
  QuadratureNotConverged,
};

const char* to_string(Errc code);

/// Every failure in the library is reported through this exception; `code()`
/// identifies the condition and `what()` names the offending field or value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Speed c and switching intensity lambda of the random flight.
/// Only obtainable through validate_params, so c > 0 and lambda > 0 always hold.
class FlightParams {
 public:
  double c() const noexcept { return c_; }
  double lambda() const noexcept { return lambda_; }
  /// Radius of the support ball at time t.
  double reach(double t) const noexcept { return c_ * t; }

  friend bool operator==(const FlightParams&, const FlightParams&) = default;
  friend FlightParams validate_params(double c, double lambda);

 private:
  FlightParams(double c, double lambda) : c_(c), lambda_(lambda) {}
  double c_;
  double lambda_;
};

FlightParams validate_params(double c, double lambda);

struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}
inline double norm(const Vec3& v) { return std::hypot(v.x1, v.x2, v.x3); }
inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

// Infinite series stop at the first index whose absolute term drops below
// tail_tol, or after max_terms terms.
struct SeriesTruncation {
  int max_terms = 200;
  double tail_tol = 1e-14;

  friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;
};

SeriesTruncation validate_truncation(int max_terms, double tail_tol);

/// Transition density at a point, split into the sphere atom (radius, mass)
/// and the absolutely continuous value. The atom is never a pointwise value.
struct DensityValue {
  double atom_radius = 0.0;
  double atom_mass = 0.0;
  double ac_value = 0.0;

  friend bool operator==(const DensityValue&, const DensityValue&) = default;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20160701;
  std::uint64_t chunk = 1 << 16;
  /// 0 picks std::thread::hardware_concurrency(). Never affects results.
  unsigned workers = 0;

  friend bool operator==(const McConfig&, const McConfig&) = default;
};

void check_config(const McConfig& cfg);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

}  // namespace rflight
