#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>

#include "rflight/model.hpp"
#include "rflight/specfun.hpp"

using namespace rflight;
using boost::multiprecision::cpp_rational;

namespace {

constexpr double kPi = std::numbers::pi;

cpp_rational rising(const cpp_rational& x, unsigned k) {
  cpp_rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x + i;
  return r;
}

// Exact 5F4(1,1,1,-k,-k-1/2; -k+1/2,-k+1/2,3/2,2; 1).
double hyp5f4_rational(unsigned k) {
  const cpp_rational half(1, 2);
  const cpp_rational mk = -static_cast<int>(k);
  cpp_rational sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    cpp_rational num = rising(1, j) * rising(1, j) * rising(1, j) * rising(mk, j) * rising(mk - half, j);
    cpp_rational den = rising(mk + half, j) * rising(mk + half, j) * rising(cpp_rational(3, 2), j) *
                       rising(2, j) * rising(1, j);
    sum += num / den;
  }
  return static_cast<double>(sum);
}

// Exact 3F2(-n, 1/2, a/2; -n+1/2, a/2+1; 1) for rational a.
double hyp3f2_rational(unsigned n, const cpp_rational& a) {
  const cpp_rational half(1, 2);
  const cpp_rational mn = -static_cast<int>(n);
  cpp_rational sum = 0;
  for (unsigned j = 0; j <= n; ++j) {
    sum += rising(mn, j) * rising(half, j) * rising(a / 2, j) /
           (rising(mn + half, j) * rising(a / 2 + 1, j) * rising(1, j));
  }
  return static_cast<double>(sum);
}

double quad_oracle(auto f, double x) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, x, 12, 1e-14);
}

}  // namespace

TEST_CASE("log_gamma examples") {
  CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  // Gamma(7/2) = sqrt(pi) 5!! / 2^3
  CHECK(log_gamma(3.5) == doctest::Approx(std::log(std::sqrt(kPi) * 15.0 / 8.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), Error);
  CHECK_THROWS_AS(log_gamma(-1.5), Error);
}

TEST_CASE("half-integer gamma is a double factorial") {
  double dfact = 1.0;  // (2k-1)!!
  for (unsigned k = 0; k <= 15; ++k) {
    if (k > 0) dfact *= 2.0 * k - 1.0;
    const double value = std::exp(log_gamma(k + 0.5)) * std::pow(2.0, k) / std::sqrt(kPi);
    // 29!! is near 2^53; exp(log_gamma) cannot resolve single units there
    if (k <= 14) CHECK(std::round(value) == dfact);
    CHECK(value == doctest::Approx(dfact).epsilon(1e-12));
  }
}

TEST_CASE("log_abs_gamma tracks sign") {
  int sign = 0;
  const double v = log_abs_gamma(-0.5, sign);  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(sign == -1);
  CHECK(v == doctest::Approx(std::log(2.0 * std::sqrt(kPi))).epsilon(1e-14));
  log_abs_gamma(-1.5, sign);
  CHECK(sign == 1);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(-3.0, 2) == 6.0);
  CHECK(pochhammer(-3.0, 4) == 0.0);
  CHECK(pochhammer(2.7, 0) == 1.0);
  CHECK(pochhammer(-5.0, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  // (-n)_k = (-1)^k n!/(n-k)!
  for (unsigned k = 0; k <= 6; ++k) {
    double expected = 1.0;
    for (unsigned i = 0; i < k; ++i) expected *= -(6.0 - i);
    CHECK(pochhammer(-6.0, k) == expected);
  }
}

TEST_CASE("bessel_j examples") {
  CHECK(bessel_j(BesselOrder::half(0), kPi / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(bessel_j(BesselOrder::integer(0), 0.0) == 1.0);
  CHECK(bessel_j(BesselOrder::integer(3), 0.0) == 0.0);
  CHECK(bessel_j(BesselOrder::half(2), 0.0) == 0.0);
  CHECK(bessel_j(BesselOrder::integer(1), 1e-4) == doctest::Approx(5e-5).epsilon(1e-8));
  CHECK_THROWS_AS(bessel_j(BesselOrder::integer(0), -1.0), Error);
}

TEST_CASE("bessel_j matches the standard library on [0, 100]") {
  double worst = 0.0;
  for (unsigned n = 0; n <= 60; ++n) {
    for (int i = 0; i <= 400; ++i) {
      const double x = 0.25 * i;
      const double a = bessel_j(BesselOrder::integer(n), x);
      const double b = bessel_j(BesselOrder::half(n), x);
      worst = std::max(worst, std::abs(a - std::cyl_bessel_j(static_cast<double>(n), x)));
      worst = std::max(worst, std::abs(b - std::cyl_bessel_j(n + 0.5, x)));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("bessel_j small-argument power law") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto order : {BesselOrder::integer(n), BesselOrder::half(n)}) {
      const double nu = order.value();
      for (double x : {1e-2, 5e-3, 1e-3}) {
        const double leading = std::pow(x / 2.0, nu) / std::tgamma(nu + 1.0);
        // next term of the series has relative size x^2 / (4 (nu + 1))
        CHECK(std::abs(bessel_j(order, x) - leading) <= std::pow(x, nu + 2.0));
      }
    }
  }
}

TEST_CASE("si and ci_paper examples") {
  CHECK(si(0.0) == 0.0);
  CHECK(ci_paper(0.0) == 0.0);
  const double x = 1e-3;
  CHECK(si(x) == doctest::Approx(x - x * x * x / 18.0).epsilon(1e-15));
  CHECK(ci_paper(x) == doctest::Approx(-x * x / 4.0).epsilon(1e-6));
  CHECK_THROWS_AS(si(-1.0), Error);
  CHECK_THROWS_AS(ci_paper(-1.0), Error);
}

TEST_CASE("si and ci_paper match an independent quadrature") {
  auto sinc = [](double s) { return s == 0.0 ? 1.0 : std::sin(s) / s; };
  auto cosm = [](double s) { return s == 0.0 ? 0.0 : (std::cos(s) - 1.0) / s; };
  for (double x : {0.5, 2.0, 7.5, 9.99, 10.01, 14.0, 25.0, 60.0}) {
    CAPTURE(x);
    CHECK(std::abs(si(x) - quad_oracle(sinc, x)) <= 1e-10);
    CHECK(std::abs(ci_paper(x) - quad_oracle(cosm, x)) <= 1e-10);
  }
}

TEST_CASE("si is nonnegative and increasing on [0, pi]; ci_paper is nonpositive") {
  double prev = -1.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = 0.05 * i;
    CHECK(si(x) >= 0.0);
    CHECK(ci_paper(x) <= 0.0);
    if (x <= kPi) {
      CHECK(si(x) > prev);
      prev = si(x);
    }
  }
}

TEST_CASE("hyp5f4_unit against exact rational sums") {
  CHECK(hyp5f4_unit(0) == 1.0);
  CHECK(hyp5f4_unit(1) == doctest::Approx(3.0).epsilon(1e-15));
  for (unsigned k = 0; k <= 20; ++k) {
    CAPTURE(k);
    CHECK(hyp5f4_unit(k) == doctest::Approx(hyp5f4_rational(k)).epsilon(1e-12));
  }
}

TEST_CASE("hyp3f2_unit_terminating against exact rational sums") {
  CHECK(hyp3f2_unit_terminating(0, 2.7) == 1.0);
  // n = 1: 1 + (-1)(1/2)(a/2) / ((-1/2)(a/2+1)) = 1 + a/(a+2)
  CHECK(hyp3f2_unit_terminating(1, 1.0) == doctest::Approx(1.0 + 1.0 / 3.0).epsilon(1e-15));
  const cpp_rational as[] = {cpp_rational(1, 2), 1, 2, 3, cpp_rational(7, 2), cpp_rational(-3, 2)};
  for (const auto& a : as) {
    for (unsigned n = 0; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(hyp3f2_unit_terminating(n, static_cast<double>(a)) ==
            doctest::Approx(hyp3f2_rational(n, a)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(hyp3f2_unit_terminating(3, 0.0), Error);
  CHECK_THROWS_AS(hyp3f2_unit_terminating(3, -2.0), Error);
}
