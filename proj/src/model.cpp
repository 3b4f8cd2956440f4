#include "rflight/model.hpp"

#include <cmath>

namespace rflight {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NonPositiveSpeed: return "NonPositiveSpeed";
    case Errc::NonPositiveIntensity: return "NonPositiveIntensity";
    case Errc::NonFinite: return "NonFinite";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::UnsupportedPower: return "UnsupportedPower";
    case Errc::TruncationNotConverged: return "TruncationNotConverged";
    case Errc::RadiusOutsideBall: return "RadiusOutsideBall";
    case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

FlightParams validate_params(double c, double lambda) {
  if (!std::isfinite(c)) throw Error(Errc::NonFinite, "c must be finite");
  if (!std::isfinite(lambda)) throw Error(Errc::NonFinite, "lambda must be finite");
  if (!(c > 0.0)) throw Error(Errc::NonPositiveSpeed, "c must be > 0");
  if (!(lambda > 0.0)) throw Error(Errc::NonPositiveIntensity, "lambda must be > 0");
  return FlightParams(c, lambda);
}

SeriesTruncation validate_truncation(int max_terms, double tail_tol) {
  if (max_terms < 1) throw Error(Errc::InvalidParameter, "max_terms must be >= 1");
  if (!(tail_tol >= 0.0) || !std::isfinite(tail_tol))
    throw Error(Errc::InvalidParameter, "tail_tol must be finite and >= 0");
  return SeriesTruncation{max_terms, tail_tol};
}

void check_config(const McConfig& cfg) {
  if (cfg.samples < 1) throw Error(Errc::InvalidParameter, "samples must be >= 1");
  if (cfg.chunk < 1) throw Error(Errc::InvalidParameter, "chunk must be >= 1");
}

}  // namespace rflight
