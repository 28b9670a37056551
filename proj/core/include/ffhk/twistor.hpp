#pragma once

#include <functional>

#include "ffhk/forms.hpp"
#include "ffhk/invariant.hpp"

namespace ffhk {

/// Holomorphic Darboux coordinates and their log-differentials in the
/// (c1, c2, theta_m, theta_e) frame, at a fixed twistor parameter.
struct DarbouxPair {
  Complex chi_e{0.0, 0.0};
  Complex chi_m{0.0, 0.0};  ///< semi-flat value
  FormAtPoint dlog_chi_e{1, frames::c_theta()};
  FormAtPoint dlog_chi_m{1, frames::c_theta()};  ///< semi-flat part
};

/// Half-line {t * direction : t > 0} used as integration contour.
struct RayContour {
  Complex direction{1.0, 0.0};
  double angular_margin = 0.2;
};

/// Trapezoid quadrature policy for the ray integrals (substitution
/// zeta' = direction * e^s; step h, integrand cut off at |exponent| >
/// tail).
struct QuadratureControl {
  double h = 0.02;
  double tail = 45.0;
  double angular_margin = 0.2;
  bool enforce_margin = true;  ///< reject zeta within the margin of a contour
};

struct CpsResult {
  Complex value;
  bool near_contour;
};

struct BesselIdentityReport {
  std::array<Complex, 6> quadrature;  ///< (l+, l-) x powers (0, +1, -1)
  std::array<Complex, 6> series;
  double max_residual;
};

struct LaurentFit {
  FormAtPoint pole;      ///< coefficient of 1/zeta
  FormAtPoint constant;  ///< coefficient of zeta^0
  FormAtPoint linear;    ///< coefficient of zeta
  double residual;       ///< max per-sample model misfit
};

struct TwistorMetric {
  HyperkahlerExtraction extraction;       ///< in the (c1,c2,theta_m,theta_e) frame
  std::array<FormAtPoint, 3> triple;      ///< (omega, Re Omega, Im Omega)
  MetricAtPoint metric_ov;                ///< converted to (c1,c2,theta_e,theta_m)
  double laurent_residual;
};

namespace twistor {

/// chi_e = exp[piR(c/zeta + zeta cbar) + i theta_e] and the semi-flat
/// chi_m = exp[i piR Z_m / zeta - i theta_m - i piR zeta conj(Z_m)].
DarbouxPair darboux_sf(const BasePoint& c, double theta_m, double theta_e,
                       const HarmonicInvariant& s, const ModelParams& params, Complex zeta);

/// The uncorrected twistor family -Omega/2zeta + omega^sf + zeta
/// conj(Omega)/2 in the angle frame.
FormAtPoint varpi_sf(const BasePoint& c, const HarmonicInvariant& s, const ModelParams& params,
                     Complex zeta);

/// Cauchy integral (1/2pi i) int_ray jump(t)/(t - z) dt by adaptive
/// trapezoid quadrature in log arclength.
CpsResult cps_solve(const RayContour& contour, const std::function<Complex(Complex)>& jump,
                    Complex z, double tol = 1e-10);

/// The decay contours for the electric coordinate: l+ passes through
/// -c/|c| (where |chi_e| < 1), l- through +c/|c|.
RayContour contour_plus(const BasePoint& c, double angular_margin = 0.2);
RayContour contour_minus(const BasePoint& c, double angular_margin = 0.2);

/// Exponent of the multiplicative correction to chi_m.
Complex gmn_correction_exponent(const BasePoint& c, double theta_e, const ModelParams& params,
                                Complex zeta, const QuadratureControl& qc = {});

/// The correction factor exp(gmn_correction_exponent).
Complex gmn_correction(const BasePoint& c, double theta_e, const ModelParams& params, Complex zeta,
                       const QuadratureControl& qc = {});

/// Differential of the correction exponent (derivatives taken under the
/// integral sign), as a complex 1-form in the angle frame.
FormAtPoint gmn_correction_differential(const BasePoint& c, double theta_e,
                                        const ModelParams& params, Complex zeta,
                                        const QuadratureControl& qc = {});

/// Number of trapezoid nodes a single ray integral uses at this point.
int contour_node_count(const BasePoint& c, const ModelParams& params,
                       const QuadratureControl& qc = {});

/// Six ray integrals of zeta'^p chi_e^{+-1}/(1 - chi_e^{+-1}) against
/// their K0/K1 series closed forms.
BesselIdentityReport contour_bessel_identities(const BasePoint& c, double theta_e,
                                               const ModelParams& params,
                                               const QuadratureControl& qc = {});

/// varpi(zeta) = (1/2piR) xi_m ^ xi_e with the corrected potential and
/// connection (series route; no quadrature).
FormAtPoint corrected_twistor_form(const BasePoint& c, double theta_e,
                                   const HarmonicInvariant& s, const ModelParams& params,
                                   Complex zeta);

/// Verification route: (1/2piR) dlog chi_m ^ dlog chi_e with the
/// contour-integral correction differentiated under the integral sign.
FormAtPoint corrected_twistor_form_chi(const BasePoint& c, double theta_e,
                                       const HarmonicInvariant& s, const ModelParams& params,
                                       Complex zeta, const QuadratureControl& qc = {});

/// Least-squares fit of samples w(zeta_k) to pole/zeta + constant +
/// linear*zeta, per coefficient.
LaurentFit fit_laurent(const std::vector<Complex>& zetas, const std::vector<FormAtPoint>& samples);

/// Samples the twistor family on a zeta circle, fits the Laurent model,
/// and feeds the triple to the quaternionic extraction. Throws
/// NumericalError when the Laurent misfit exceeds fit_tol.
TwistorMetric extract_metric(const BasePoint& c, double theta_e, const HarmonicInvariant& s,
                             const ModelParams& params, double fit_tol = 1e-6);

}  // namespace twistor
}  // namespace ffhk
