#pragma once

// Special functions used by the characteristic-function and density formulas.

namespace rflight {

/// Bessel order held exactly: either n or n + 1/2.
struct BesselOrder {
  enum class Kind { Integer, HalfInteger };
  Kind kind = Kind::Integer;
  unsigned n = 0;

  static constexpr BesselOrder integer(unsigned n) { return {Kind::Integer, n}; }
  /// Order n + 1/2.
  static constexpr BesselOrder half(unsigned n) { return {Kind::HalfInteger, n}; }
  constexpr double value() const { return kind == Kind::Integer ? n : n + 0.5; }

  friend bool operator==(const BesselOrder&, const BesselOrder&) = default;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln|Gamma(x)| and the sign of Gamma(x), for any x that is not a
/// nonpositive integer.
double log_abs_gamma(double x, int& sign);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1.
double pochhammer(double x, unsigned k);

/// J_order(x) for x >= 0. Absolute error below 1e-12 on [0, 100].
double bessel_j(BesselOrder order, double x);

/// Si(x) = integral_0^x sin(s)/s ds, x >= 0.
double si(double x);

/// integral_0^x (cos(s) - 1)/s ds, x >= 0.
///
/// Not the classical cosine integral: there is no Euler constant or log
/// term, the value is 0 at the origin and nonpositive everywhere. It equals
/// -Cin(x). This is the convention under which the single-switch
/// characteristic function tends to 1 at zero frequency.
double ci_paper(double x);

/// 5F4(1,1,1,-k,-k-1/2; -k+1/2,-k+1/2,3/2,2; 1), a sum of k+1 positive terms.
double hyp5f4_unit(unsigned k);

/// 3F2(-n, 1/2, a/2; -n+1/2, a/2+1; 1), terminating after n+1 terms.
/// Throws InvalidParameter when a is a nonpositive integer.
double hyp3f2_unit_terminating(unsigned n, double a);

}  // namespace rflight
