#pragma once

#include "ffhk/forms.hpp"
#include "ffhk/invariant.hpp"
#include "ffhk/local_model.hpp"

namespace ffhk {

/// Building blocks of the semi-flat form in the flow-time frame.
struct SemiflatCoefficients {
  double m;    ///< S11 - c1/|c|^2
  double n;    ///< S12 - c2/|c|^2
  double lam;  ///< S1 - ln|c|
  double w_c1c2, w_c1t1, w_c1t2, w_c2t1, w_c2t2, w_t1t2;
};

/// Residuals of the quadratic identities tying the semi-flat form to the
/// holomorphic 2-form.
struct SemiflatIdentityResiduals {
  Complex wedge_square;      ///< w^sf ^ w^sf - (1/2) Omega ^ conj(Omega)
  Complex wedge_omega;       ///< w^sf ^ Omega
  Complex wedge_omega_conj;  ///< w^sf ^ conj(Omega)
};

namespace semiflat {

SemiflatCoefficients semiflat_coefficients(const BasePoint& c, const FiberPoint& t,
                                           const HarmonicInvariant& s, const ModelParams& params);

/// The semi-flat Kahler form in the (c1, c2, t1, t2) frame, by the
/// explicit coefficient formulas. Throws DomainError when the lattice
/// stretch vanishes.
FormAtPoint semiflat_form(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s,
                          const ModelParams& params);

/// Independent route: pi R Re(dZ_m ^ conj(dZ_e)) + (1/2piR) dtheta_m ^
/// dtheta_e with every differential taken by central differences.
FormAtPoint semiflat_form_definition(const BasePoint& c, const FiberPoint& t,
                                     const HarmonicInvariant& s, const ModelParams& params,
                                     double h = 1e-6);

/// The same form in the angle frame (c1, c2, theta_m, theta_e), where it
/// is R lam dc1 ^ dc2 + (1/2piR) dtheta_m ^ dtheta_e.
FormAtPoint semiflat_form_angle(const BasePoint& c, const HarmonicInvariant& s,
                                const ModelParams& params);

/// g(X, Y) = w^sf(X, JY) with J the vector-field complex structure
/// (dc1 -> dc2, dt1 -> -dt2 on covectors).
MetricAtPoint semiflat_metric_matrix(const BasePoint& c, const FiberPoint& t,
                                     const HarmonicInvariant& s, const ModelParams& params);

SemiflatIdentityResiduals verify_quadratic_identities(const BasePoint& c, const FiberPoint& t,
                                                      const HarmonicInvariant& s,
                                                      const ModelParams& params);

/// phi = t1^2 / (R lam), the Kahler potential of the fiber part.
double decomposition_potential(const BasePoint& c, const FiberPoint& t,
                               const HarmonicInvariant& s, const ModelParams& params);

/// Max coefficient residual of i ddbar phi (FD, complex coordinates
/// u1 = c1 + i c2, u2 = t1 - i t2) against the fiber part
/// (1/2piR) dtheta_m ^ dtheta_e of the semi-flat form.
double decomposition_residual(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s,
                              const ModelParams& params, double h = 1e-4);

}  // namespace semiflat
}  // namespace ffhk
