#include <cmath>

#include <doctest.h>

#include "ffhk/errors.hpp"
#include "ffhk/special.hpp"

namespace {

// integral representation K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt,
// trapezoid in t; independent of the implementation's series/asymptotics
double bessel_oracle(double x, int nu) {
  const double h = 1e-4;
  double acc = 0.5;  // t = 0 term, cosh(0) = 1
  for (int k = 1; k * h < 60.0; ++k) {
    const double t = k * h;
    const double term = std::exp(-x * std::cosh(t) + x) * std::cosh(nu * t);
    acc += term;
    if (term < 1e-18 && t > 5.0) break;
  }
  return acc * h * std::exp(-x);
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("frozen reference values at x = 1") {
  CHECK(ffhk::special::bessel_k0(1.0) == doctest::Approx(0.4210244382407084).epsilon(1e-12));
  CHECK(ffhk::special::bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-12));
}

TEST_CASE("matches the integral representation") {
  for (double x : {0.05, 0.3, 1.7, 6.0, 25.0}) {
    CHECK(ffhk::special::bessel_k0(x) == doctest::Approx(bessel_oracle(x, 0)).epsilon(1e-9));
    CHECK(ffhk::special::bessel_k1(x) == doctest::Approx(bessel_oracle(x, 1)).epsilon(1e-9));
  }
}

TEST_CASE("scaled variants factor out e^{-x}") {
  for (double x : {0.2, 3.0, 50.0, 600.0}) {
    const double k0 = ffhk::special::bessel_k0_scaled(x);
    const double k1 = ffhk::special::bessel_k1_scaled(x);
    CHECK(k0 > 0.0);
    CHECK(k1 > k0);  // K1 > K0 for all x > 0
    if (x < 600.0) {
      CHECK(ffhk::special::bessel_k0(x) == doctest::Approx(k0 * std::exp(-x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("small-x logarithmic behaviour") {
  const double gamma = 0.5772156649015329;
  const double x = 1e-5;
  CHECK(ffhk::special::bessel_k0(x) ==
        doctest::Approx(-std::log(x / 2.0) - gamma).epsilon(1e-9));
  // x K1(x) -> 1
  CHECK(x * ffhk::special::bessel_k1(x) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ffhk::special::bessel_k0(0.0), ffhk::DomainError);
  CHECK_THROWS_AS(ffhk::special::bessel_k1(-1.0), ffhk::DomainError);
}

TEST_CASE("underflow is a clean zero") {
  CHECK(ffhk::special::bessel_k0(800.0) == 0.0);
}

}  // TEST_SUITE
