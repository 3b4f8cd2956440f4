#pragma once

// Adaptive 21-point Gauss-Kronrod quadrature with global bisection.
// Endpoint singularities are expected to be transformed away by the caller.

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "rflight/model.hpp"

namespace rflight::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  friend bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }
};

namespace detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980393270, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights belong to the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

}  // namespace detail

template <class F>
Segment gauss_kronrod21(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = detail::kKronrodWeights[10] * f(center);
  double gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * detail::kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += detail::kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += detail::kGaussWeights[i / 2] * pair;
  }
  return Segment{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

/// Integrates f over [a, b] until the summed error estimate is below abs_tol.
/// Throws Error(QuadratureNotConverged) when max_intervals is exhausted.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, int max_intervals = 4000) {
  if (a == b) return Result{};
  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod21(f, a, b));
  double error = heap.top().error;
  int intervals = 1;
  while (error > abs_tol) {
    if (intervals >= max_intervals) {
      throw Error(Errc::QuadratureNotConverged,
                  "error estimate " + std::to_string(error) + " above tolerance after " +
                      std::to_string(intervals) + " intervals");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod21(f, worst.a, mid);
    const Segment right = gauss_kronrod21(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++intervals;
    error += left.error + right.error - worst.error;
  }
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return Result{value, err, intervals};
}

}  // namespace rflight::quad
