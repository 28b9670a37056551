#pragma once

namespace ffhk::special {

/// Modified Bessel function of the second kind, order 0.
/// Relative error <= 1e-12 on [1e-6, 700]; returns 0 once e^{-x} underflows.
/// Throws DomainError for x <= 0.
double bessel_k0(double x);

/// Modified Bessel function of the second kind, order 1. Same contract as bessel_k0.
double bessel_k1(double x);

/// Exponentially scaled variants e^{x} K_nu(x), valid for all x > 0.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

}  // namespace ffhk::special
