#include "ffhk/lattice_sum.hpp"

#include <algorithm>
#include <cmath>

#include "ffhk/errors.hpp"

namespace ffhk {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Tail sum_{n > N} [ 1/sqrt(rho^2 + (tau + n)^2) - 1/n ] by the midpoint
// Euler-Maclaurin formula: integral from N+1/2 plus g'/24 + 7 g'''/5760.
// With N >= 50 the remaining error is O(g^(5)) ~ 1e-15.
double tail(double rho, double tau, double big_n) {
  const double a = big_n + 0.5;
  double integral;
  if (rho == 0.0) {
    integral = -std::log1p(tau / a);
  } else {
    integral = std::log(2.0) - std::log(rho) - std::asinh((tau + a) / rho) + std::log(a);
  }
  const double u = tau + a;
  const double r2 = rho * rho + u * u;
  const double phi = 1.0 / std::sqrt(r2);
  const double phi3 = phi / r2;
  const double phi5 = phi3 / r2;
  const double phi7 = phi5 / r2;
  const double g1 = -u * phi3 + 1.0 / (a * a);
  const double g3 = 9.0 * u * phi5 - 15.0 * u * u * u * phi7 + 6.0 / (a * a * a * a);
  return integral + g1 / 24.0 + 7.0 * g3 / 5760.0;
}

}  // namespace

double regularized_theta_sum(double rho, double tau) {
  if (rho < 0.0) throw DomainError("regularized_theta_sum: rho must be >= 0");
  if (rho == 0.0 && tau == std::round(tau)) {
    throw SingularityError("regularized_theta_sum: singular point rho = 0, tau integer");
  }
  const int n_cut = std::max(50, static_cast<int>(std::ceil(10.0 * (rho + std::abs(tau)))));
  double s = 1.0 / std::hypot(rho, tau);
  for (int n = 1; n <= n_cut; ++n) {
    s += 1.0 / std::hypot(rho, tau + n) - 1.0 / n;
    s += 1.0 / std::hypot(rho, tau - n) - 1.0 / n;
  }
  s += tail(rho, tau, n_cut);
  s += tail(rho, -tau, n_cut);
  return s;
}

double theta_sum_shift_constant() { return 0.0; }

double theta_sum_zero_mode(double rho) {
  if (rho <= 0.0) throw DomainError("theta_sum_zero_mode: rho must be positive");
  return -2.0 * std::log(rho) + 2.0 * (std::log(2.0) - kEulerGamma);
}

}  // namespace ffhk
