#include "ffhk/twistor.hpp"

#include <cmath>

#include "ffhk/errors.hpp"
#include "ffhk/holomorphic.hpp"
#include "ffhk/ooguri_vafa.hpp"
#include "ffhk/semiflat.hpp"
#include "ffhk/special.hpp"

namespace ffhk::twistor {

namespace {

const Complex kI{0.0, 1.0};

FormAtPoint dc_form(Complex z) {  // z * dc
  return FormAtPoint::one_form(frames::c_theta(), {z, kI * z, 0.0, 0.0});
}
FormAtPoint dcb_form(Complex z) {  // z * dcbar
  return FormAtPoint::one_form(frames::c_theta(), {z, -kI * z, 0.0, 0.0});
}
FormAtPoint dtheta_m(Complex z) {
  return FormAtPoint::one_form(frames::c_theta(), {0.0, 0.0, z, 0.0});
}
FormAtPoint dtheta_e(Complex z) {
  return FormAtPoint::one_form(frames::c_theta(), {0.0, 0.0, 0.0, z});
}

double angular_distance(Complex z, Complex direction) {
  double a = std::arg(z / direction);
  return std::abs(a);
}

void check_margin(const BasePoint& c, Complex zeta, const QuadratureControl& qc) {
  if (!qc.enforce_margin) return;
  const Complex dir = c.c() / c.abs();
  if (angular_distance(zeta, dir) < qc.angular_margin ||
      angular_distance(zeta, -dir) < qc.angular_margin) {
    throw DomainError("twistor: zeta within the angular margin of a contour");
  }
}

double smax_for(const BasePoint& c, const ModelParams& params, const QuadratureControl& qc) {
  const double x = 2.0 * M_PI * params.R * c.abs();
  return std::acosh(std::max(qc.tail / x, 1.5)) + 1.0;
}

}  // namespace

DarbouxPair darboux_sf(const BasePoint& c, double theta_m, double theta_e,
                       const HarmonicInvariant& s, const ModelParams& params, Complex zeta) {
  if (zeta == Complex{0.0, 0.0}) throw DomainError("darboux_sf: zeta = 0");
  const double piR = M_PI * params.R;
  const CentralCharge z = holomorphic::central_charges(c, s);
  DarbouxPair out;
  out.chi_e = std::exp(piR * (c.c() / zeta + zeta * std::conj(c.c())) + kI * theta_e);
  out.chi_m = std::exp(kI * piR * z.Z_m / zeta - kI * theta_m -
                       kI * piR * zeta * std::conj(z.Z_m));
  out.dlog_chi_e = dc_form(piR / zeta) + dcb_form(piR * zeta) + dtheta_e(kI);
  out.dlog_chi_m = dc_form(kI * piR * z.dZ_m_dc / zeta) +
                   dcb_form(-kI * piR * zeta * std::conj(z.dZ_m_dc)) + dtheta_m(-kI);
  return out;
}

FormAtPoint varpi_sf(const BasePoint& c, const HarmonicInvariant& s, const ModelParams& params,
                     Complex zeta) {
  const CentralCharge z = holomorphic::central_charges(c, s);
  const FormAtPoint omega = wedge(dc_form(z.dZ_m_dc), dtheta_e(1.0)) +
                            wedge(dc_form(-kI), dtheta_m(1.0));
  const FormAtPoint wsf = semiflat::semiflat_form_angle(c, s, params);
  return omega * (-0.5 / zeta) + wsf + omega.conjugate() * (0.5 * zeta);
}

CpsResult cps_solve(const RayContour& contour, const std::function<Complex(Complex)>& jump,
                    Complex z, double tol) {
  const Complex d = contour.direction / std::abs(contour.direction);
  CpsResult out;
  out.near_contour = angular_distance(z, d) < contour.angular_margin;

  auto integrand = [&](double s) {
    const Complex t = d * std::exp(s);
    return jump(t) * t / (t - z) / (2.0 * M_PI * kI);
  };
  double smax = 10.0;
  while (smax < 40.0 &&
         std::abs(integrand(smax)) + std::abs(integrand(-smax)) > 0.01 * tol) {
    smax += 4.0;
  }
  auto trapezoid = [&](double h) {
    Complex acc{0.0, 0.0};
    const int n = static_cast<int>(std::floor(smax / h));
    for (int k = -n; k <= n; ++k) acc += integrand(k * h);
    return acc * h;
  };
  double h = 0.1;
  Complex prev = trapezoid(h);
  while (h > 1e-5) {
    h /= 2.0;
    const Complex cur = trapezoid(h);
    if (std::abs(cur - prev) < tol) return {cur, out.near_contour};
    prev = cur;
  }
  return {prev, out.near_contour};
}

RayContour contour_plus(const BasePoint& c, double angular_margin) {
  return {-c.c() / c.abs(), angular_margin};
}

RayContour contour_minus(const BasePoint& c, double angular_margin) {
  return {c.c() / c.abs(), angular_margin};
}

Complex gmn_correction_exponent(const BasePoint& c, double theta_e, const ModelParams& params,
                                Complex zeta, const QuadratureControl& qc) {
  if (c.abs() == 0.0) throw DomainError("gmn_correction_exponent: c = 0");
  check_margin(c, zeta, qc);
  const double piR = M_PI * params.R;
  const double smax = smax_for(c, params, qc);
  const int n = static_cast<int>(std::floor(smax / qc.h));
  Complex total{0.0, 0.0};
  for (double sgn : {1.0, -1.0}) {
    const Complex dir = -sgn * c.c() / c.abs();
    Complex acc{0.0, 0.0};
    for (int k = -n; k <= n; ++k) {
      const Complex zp = dir * std::exp(k * qc.h);
      const Complex ex = piR * (c.c() / zp + zp * std::conj(c.c()));
      const Complex xx = std::exp(sgn * (ex + kI * theta_e));
      acc += (zp + zeta) / (zp - zeta) * std::log(1.0 - xx);
    }
    total += sgn * (kI / (4.0 * M_PI)) * acc * qc.h;
  }
  return total;
}

Complex gmn_correction(const BasePoint& c, double theta_e, const ModelParams& params, Complex zeta,
                       const QuadratureControl& qc) {
  return std::exp(gmn_correction_exponent(c, theta_e, params, zeta, qc));
}

FormAtPoint gmn_correction_differential(const BasePoint& c, double theta_e,
                                        const ModelParams& params, Complex zeta,
                                        const QuadratureControl& qc) {
  if (c.abs() == 0.0) throw DomainError("gmn_correction_differential: c = 0");
  check_margin(c, zeta, qc);
  const double piR = M_PI * params.R;
  const double smax = smax_for(c, params, qc);
  const int n = static_cast<int>(std::floor(smax / qc.h));
  std::array<Complex, 4> coeffs{};
  for (double sgn : {1.0, -1.0}) {
    const Complex dir = -sgn * c.c() / c.abs();
    std::array<Complex, 3> acc{};  // dc1, dc2, dtheta_e parts
    for (int k = -n; k <= n; ++k) {
      const Complex zp = dir * std::exp(k * qc.h);
      const Complex ex = piR * (c.c() / zp + zp * std::conj(c.c()));
      const Complex xx = std::exp(sgn * (ex + kI * theta_e));
      // d log(1 - xx) = -(xx/(1-xx)) * sgn * dlog chi_e(zeta')
      const Complex fac = (zp + zeta) / (zp - zeta) * (-(xx / (1.0 - xx)) * sgn);
      acc[0] += fac * piR * (1.0 / zp + zp);
      acc[1] += fac * kI * piR * (1.0 / zp - zp);
      acc[2] += fac * kI;
    }
    const Complex pref = sgn * (kI / (4.0 * M_PI)) * qc.h;
    coeffs[0] += pref * acc[0];
    coeffs[1] += pref * acc[1];
    coeffs[3] += pref * acc[2];
  }
  return FormAtPoint::one_form(frames::c_theta(), coeffs);
}

int contour_node_count(const BasePoint& c, const ModelParams& params,
                       const QuadratureControl& qc) {
  return 2 * static_cast<int>(std::floor(smax_for(c, params, qc) / qc.h)) + 1;
}

BesselIdentityReport contour_bessel_identities(const BasePoint& c, double theta_e,
                                               const ModelParams& params,
                                               const QuadratureControl& qc) {
  if (c.abs() == 0.0) throw DomainError("contour_bessel_identities: c = 0");
  const double piR = M_PI * params.R;
  const double smax = smax_for(c, params, qc);
  const int n = static_cast<int>(std::floor(smax / qc.h));
  BesselIdentityReport rep{};
  const int powers[3] = {0, 1, -1};
  int slot = 0;
  for (double sgn : {1.0, -1.0}) {
    const Complex dir = -sgn * c.c() / c.abs();
    for (int p : powers) {
      Complex acc{0.0, 0.0};
      for (int k = -n; k <= n; ++k) {
        const Complex zp = dir * std::exp(k * qc.h);
        const Complex ex = piR * (c.c() / zp + zp * std::conj(c.c()));
        const Complex xx = std::exp(sgn * (ex + kI * theta_e));
        acc += std::pow(zp, p) * xx / (1.0 - xx);
      }
      rep.quadrature[slot++] = acc * qc.h;
    }
  }
  // Closed forms: on l+ the geometric series runs over positive electric
  // charges, on l- over negative ones.
  const Complex unit = c.c() / c.abs();
  for (int i = 0; i < 6; ++i) rep.series[i] = Complex{0.0, 0.0};
  for (int m = 1; m <= 400; ++m) {
    const double x = 2.0 * M_PI * params.R * m * c.abs();
    const double k0 = special::bessel_k0(x);
    const double k1 = special::bessel_k1(x);
    const Complex ep = std::exp(kI * (m * theta_e));
    const Complex em = std::conj(ep);
    rep.series[0] += 2.0 * ep * k0;
    rep.series[1] += -2.0 * unit * ep * k1;
    rep.series[2] += -2.0 * std::conj(unit) * ep * k1;
    rep.series[3] += 2.0 * em * k0;
    rep.series[4] += 2.0 * unit * em * k1;
    rep.series[5] += 2.0 * std::conj(unit) * em * k1;
    if (m >= 5 && k0 < 1e-18) break;
  }
  rep.max_residual = 0.0;
  for (int i = 0; i < 6; ++i) {
    rep.max_residual = std::max(rep.max_residual, std::abs(rep.quadrature[i] - rep.series[i]));
  }
  return rep;
}

FormAtPoint corrected_twistor_form(const BasePoint& c, double theta_e, const HarmonicInvariant& s,
                                   const ModelParams& params, Complex zeta) {
  const OVPoint p{c, theta_e, 0.0};
  const OoguriVafaField f = ooguri_vafa::ov_potential(p, s, params);
  const Complex a1 = f.A_inst_dc + f.A_inst_dcb;
  const Complex a2 = kI * (f.A_inst_dc - f.A_inst_dcb);
  const FormAtPoint a0 =
      FormAtPoint::one_form(frames::c_theta(), {a1, a2, 0.0, Complex{f.A_sf_dtheta_e, 0.0}});
  const double piV = M_PI * f.V;
  FormAtPoint xi_m = dtheta_m(-kI) + (2.0 * M_PI * kI) * a0 + dc_form(kI * piV / zeta) +
                     dcb_form(-kI * piV * zeta);
  const FormAtPoint xi_e = dc_form(M_PI * params.R / zeta) + dcb_form(M_PI * params.R * zeta) +
                           dtheta_e(kI);
  return wedge(xi_m, xi_e) * Complex{1.0 / (2.0 * M_PI * params.R), 0.0};
}

FormAtPoint corrected_twistor_form_chi(const BasePoint& c, double theta_e,
                                       const HarmonicInvariant& s, const ModelParams& params,
                                       Complex zeta, const QuadratureControl& qc) {
  const DarbouxPair d = darboux_sf(c, 0.0, theta_e, s, params, zeta);
  const FormAtPoint dm = d.dlog_chi_m + gmn_correction_differential(c, theta_e, params, zeta, qc);
  return wedge(dm, d.dlog_chi_e) * Complex{1.0 / (2.0 * M_PI * params.R), 0.0};
}

LaurentFit fit_laurent(const std::vector<Complex>& zetas, const std::vector<FormAtPoint>& samples) {
  if (zetas.size() != samples.size() || zetas.size() < 4) {
    throw DomainError("fit_laurent: need at least 4 matched samples");
  }
  const int nsamp = static_cast<int>(zetas.size());
  const int ncomp = samples[0].size();
  const int degree = samples[0].degree();
  const Frame frame = samples[0].frame();
  Eigen::MatrixXcd model(nsamp, 3);
  for (int k = 0; k < nsamp; ++k) {
    model(k, 0) = 1.0 / zetas[k];
    model(k, 1) = 1.0;
    model(k, 2) = zetas[k];
  }
  const auto qr = model.colPivHouseholderQr();
  LaurentFit out{FormAtPoint(degree, frame), FormAtPoint(degree, frame),
                 FormAtPoint(degree, frame), 0.0};
  Eigen::VectorXcd y(nsamp);
  for (int i = 0; i < ncomp; ++i) {
    for (int k = 0; k < nsamp; ++k) y(k) = samples[k][i];
    const Eigen::Vector3cd sol = qr.solve(y);
    out.pole[i] = sol(0);
    out.constant[i] = sol(1);
    out.linear[i] = sol(2);
    out.residual = std::max(out.residual, (model * sol - y).cwiseAbs().maxCoeff());
  }
  return out;
}

TwistorMetric extract_metric(const BasePoint& c, double theta_e, const HarmonicInvariant& s,
                             const ModelParams& params, double fit_tol) {
  if (c.abs() == 0.0) throw DomainError("extract_metric: c = 0");
  const double argc = std::arg(c.c());
  const double margin = 0.35;
  std::vector<Complex> zetas;
  std::vector<FormAtPoint> samples;
  for (int half = 0; half < 2; ++half) {
    for (int k = 0; k <= 4; ++k) {
      const double phi =
          argc + margin + k * (M_PI - 2.0 * margin) / 4.0 + (half ? M_PI : 0.0);
      const Complex zeta = 0.8 * std::exp(kI * phi);
      zetas.push_back(zeta);
      samples.push_back(corrected_twistor_form(c, theta_e, s, params, zeta));
    }
  }
  LaurentFit fit = fit_laurent(zetas, samples);
  if (fit.residual > fit_tol) {
    throw NumericalError("extract_metric: Laurent model violation, residual " +
                         std::to_string(fit.residual));
  }
  const FormAtPoint omega_c = fit.pole * Complex{-2.0, 0.0};
  TwistorMetric out{
      triple_to_metric(fit.constant.real_part(), omega_c.real_part(), omega_c.imag_part()),
      {fit.constant.real_part(), omega_c.real_part(), omega_c.imag_part()},
      MetricAtPoint{frames::ov(), Eigen::Matrix4d::Zero()},
      fit.residual};
  // Angle-frame metric (c1,c2,theta_m,theta_e) -> Ooguri-Vafa frame
  // (c1,c2,theta_e,theta_m) with the magnetic angle orientation flip.
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p(0, 0) = 1.0;
  p(1, 1) = 1.0;
  p(2, 3) = -1.0;
  p(3, 2) = 1.0;
  out.metric_ov.g = p.transpose() * out.extraction.metric.g * p;
  return out;
}

}  // namespace ffhk::twistor
