#pragma once

namespace ffhk {

/// Kappa-regularized lattice sum
///   sum_{n in Z} [ 1/sqrt(rho^2 + (tau + n)^2) - kappa(n) ],
/// kappa(0) = 0, kappa(n) = 1/|n|. Absolute error <= 1e-10.
/// Throws SingularityError when rho = 0 and tau is an integer.
double regularized_theta_sum(double rho, double tau);

/// Additive constant by which the sum changes under tau -> tau + 1.
/// The reindexed kappa terms telescope to zero on both half-lattices,
/// so the regularized sum is exactly periodic; kept as a named constant
/// because the periodicity is a bookkeeping fact, not an accident of
/// the summand.
double theta_sum_shift_constant();

/// Analytic zero mode of the sum: -2 ln rho + 2 (ln 2 - gamma_E).
/// The Fourier route to the same quantity (see ooguri_vafa) adds the
/// K0 series on top of this.
double theta_sum_zero_mode(double rho);

}  // namespace ffhk
