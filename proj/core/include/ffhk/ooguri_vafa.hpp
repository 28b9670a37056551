#pragma once

#include "ffhk/forms.hpp"
#include "ffhk/invariant.hpp"
#include "ffhk/local_model.hpp"

namespace ffhk {

/// Point of the S^1 bundle over R^2 x S^1.
struct OVPoint {
  BasePoint base;
  double theta_e = 0.0;
  double theta_m = 0.0;
};

/// Truncation policy for the Bessel series.
struct SeriesControl {
  double tol = 1e-16;
  int max_terms = 500;
  int min_terms = 5;
};

/// Potential and connection data at a point. The Bessel-route fields
/// (V_sf, V_inst, A, sigma) are NaN at c = 0, where only the lattice
/// route converges.
struct OoguriVafaField {
  double V = 0.0;       ///< lattice-sum route
  double V_sf = 0.0;    ///< (R/2pi)(S1 - ln|c|)
  double V_inst = 0.0;  ///< (R/pi) sum cos(n theta_e) K0(2piRn|c|)
  double A_sf_dtheta_e = 0.0;
  Complex A_inst_dc{0.0, 0.0};
  Complex A_inst_dcb{0.0, 0.0};
  double sigma = 0.0;
};

namespace ooguri_vafa {

/// All potential fields; throws SingularityError at (c, theta_e) = (0, 0).
OoguriVafaField ov_potential(const OVPoint& p, const HarmonicInvariant& s,
                             const ModelParams& params, const SeriesControl& series = {});

/// A0 = A^sf + A^inst as a complex 1-form in the (c1, c2, theta_e,
/// theta_m) frame (no theta_m component).
FormAtPoint ov_connection(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                          const SeriesControl& series = {});

/// Max FD residual of dA0 = *dV0 on the flat 3-space with coordinates
/// (c1, c2, theta_e / 2piR).
double connection_residual(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                           double h = 1e-4);

/// FD Laplacian of V on the same flat 3-space.
double potential_laplacian(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                           double h = 3e-4);

/// sigma = (1/pi) sum_{n>0} sin(n theta_e)/n K0(2piRn|c|); the
/// theta_e-antiderivative of V_inst / R, odd in theta_e.
double sigma_correction(const OVPoint& p, const ModelParams& params,
                        const SeriesControl& series = {});

/// Corrected action-angle coordinates: z_m, z_e as in the local model,
/// theta_e + 2pi sigma/lam and -theta_m - sigma mu/lam.
ActionAngle ov_action_angle(const OVPoint& p, const HarmonicInvariant& s,
                            const ModelParams& params);

/// omega0 = -2pi [ dc2 ^ (dtheta_m/2pi + A0) + V0 d(theta_e/2piR) ^ dc1 ]
/// in the (c1, c2, theta_e, theta_m) frame.
FormAtPoint omega0_form(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params);

/// Max coefficient residual of omega0 against the pullback of
/// dz_m ^ dtheta_e~ + dz_e ^ dtheta_m~ through an FD Jacobian of
/// ov_action_angle.
double omega0_residual(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                       double h = 1e-6);

/// g = V (dc1^2 + dc2^2 + (dtheta_e/2piR)^2) + V^{-1}(dtheta_m/2pi + A0)^2
/// in the (c1, c2, theta_e, theta_m) frame. Throws PositivityError when
/// V <= 0.
MetricAtPoint gibbons_hawking_metric(const OVPoint& p, const HarmonicInvariant& s,
                                     const ModelParams& params);

/// S1(0) + min over a theta_e scan of half the regularized lattice sum
/// on the axis; positive iff the potential stays positive at c = 0.
double positivity_margin(const HarmonicInvariant& s, const ModelParams& params,
                         int scan_points = 1024);

}  // namespace ooguri_vafa
}  // namespace ffhk
