#include <cmath>

#include <doctest.h>

#include "ffhk/errors.hpp"
#include "ffhk/lattice_sum.hpp"
#include "ffhk/special.hpp"

namespace {

// brute-force partial sum; the paired tail decays like 1/n^3, so N = 2e5
// leaves an O(1e-10) remainder
double direct_sum(double rho, double tau, int N = 200000) {
  double acc = 1.0 / std::sqrt(rho * rho + tau * tau);
  for (int n = 1; n <= N; ++n) {
    acc += 1.0 / std::sqrt(rho * rho + (tau + n) * (tau + n)) - 1.0 / n;
    acc += 1.0 / std::sqrt(rho * rho + (tau - n) * (tau - n)) - 1.0 / n;
  }
  return acc;
}

}  // namespace

TEST_SUITE("lattice_sum") {

TEST_CASE("matches brute-force summation") {
  for (double rho : {0.3, 1.1}) {
    for (double tau : {0.0, 0.25, 0.5}) {
      CHECK(ffhk::regularized_theta_sum(rho, tau) ==
            doctest::Approx(direct_sum(rho, tau)).epsilon(5e-9));
    }
  }
}

TEST_CASE("Fourier route: zero mode plus K0 series") {
  for (double rho : {0.2, 0.6}) {
    for (double tau : {0.1, 0.37, 0.5}) {
      double fourier = ffhk::theta_sum_zero_mode(rho);
      for (int n = 1; n <= 200; ++n) {
        fourier += 4.0 * std::cos(2.0 * M_PI * n * tau) *
                   ffhk::special::bessel_k0(2.0 * M_PI * n * rho);
      }
      CHECK(ffhk::regularized_theta_sum(rho, tau) == doctest::Approx(fourier).epsilon(1e-10));
    }
  }
}

TEST_CASE("exact periodicity and evenness in tau") {
  CHECK(ffhk::theta_sum_shift_constant() == 0.0);
  const double a = ffhk::regularized_theta_sum(0.4, 0.3);
  CHECK(ffhk::regularized_theta_sum(0.4, 1.3) == doctest::Approx(a).epsilon(1e-10));
  CHECK(ffhk::regularized_theta_sum(0.4, -0.3) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("closed form on the half-period axis") {
  CHECK(ffhk::regularized_theta_sum(0.0, 0.5) ==
        doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("singular point") {
  CHECK_THROWS_AS(ffhk::regularized_theta_sum(0.0, 0.0), ffhk::SingularityError);
  CHECK_THROWS_AS(ffhk::regularized_theta_sum(0.0, 3.0), ffhk::SingularityError);
}

}  // TEST_SUITE
