#include "ffhk/ooguri_vafa.hpp"

#include <cmath>
#include <limits>

#include "ffhk/errors.hpp"
#include "ffhk/lattice_sum.hpp"
#include "ffhk/special.hpp"

namespace ffhk::ooguri_vafa {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// sum_{n>0} weight(n theta_e) K_nu(2piRn|c|) with the kernel magnitude
// as the truncation criterion.
template <typename Weight>
double bessel_series(double r_abs_c, double theta_e, int nu, const SeriesControl& sc,
                     Weight weight) {
  double acc = 0.0;
  for (int n = 1; n <= sc.max_terms; ++n) {
    const double x = 2.0 * M_PI * r_abs_c * n;
    const double k = (nu == 0) ? special::bessel_k0(x) : special::bessel_k1(x);
    acc += weight(n * theta_e) * k;
    if (n >= sc.min_terms && k < sc.tol) return acc;
  }
  if (special::bessel_k0(2.0 * M_PI * r_abs_c * sc.max_terms) >= sc.tol) {
    throw NumericalError("bessel_series: truncation tolerance not reached");
  }
  return acc;
}

}  // namespace

OoguriVafaField ov_potential(const OVPoint& p, const HarmonicInvariant& s,
                             const ModelParams& params, const SeriesControl& series) {
  const double R = params.R;
  const InvariantValues v = s.eval(p.base);
  OoguriVafaField out;
  const double rho = R * p.base.abs();
  const double tau = p.theta_e / (2.0 * M_PI);
  // Lattice route, exact zero mode subtracted so that V = V_sf + V_inst.
  out.V = (R / (4.0 * M_PI)) * (regularized_theta_sum(rho, tau) + 2.0 * v.S1 -
                                2.0 * (std::log(2.0) - kEulerGamma - std::log(R)));
  if (p.base.abs() == 0.0) {
    out.V_sf = out.V_inst = out.A_sf_dtheta_e = out.sigma = kNaN;
    out.A_inst_dc = out.A_inst_dcb = Complex{kNaN, kNaN};
    return out;
  }
  const double lam = v.S1 - std::log(p.base.abs());
  out.V_sf = (R / (2.0 * M_PI)) * lam;
  out.V_inst = (R / M_PI) * bessel_series(R * p.base.abs(), p.theta_e, 0, series,
                                          [&](double x) { return std::cos(x); });
  out.A_sf_dtheta_e = -(p.base.arg() + v.S2) / (4.0 * M_PI * M_PI);
  const double k1sum = bessel_series(R * p.base.abs(), p.theta_e, 1, series,
                                     [&](double x) { return std::sin(x); });
  // A^inst = -(R/4pi)(dc/c - dcb/cb) sum sign(n) e^{in theta_e}|c| K1(2piR|nc|)
  const Complex w{0.0, -(R / (2.0 * M_PI)) * p.base.abs() * k1sum};
  out.A_inst_dc = w / p.base.c();
  out.A_inst_dcb = -w / std::conj(p.base.c());
  out.sigma = sigma_correction(p, params, series);
  return out;
}

FormAtPoint ov_connection(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                          const SeriesControl& series) {
  if (p.base.abs() == 0.0) throw DomainError("ov_connection: c = 0");
  const OoguriVafaField f = ov_potential(p, s, params, series);
  // A_inst_dc dc + A_inst_dcb dcb over (dc1, dc2); result is real.
  const Complex a1 = f.A_inst_dc + f.A_inst_dcb;
  const Complex a2 = Complex{0.0, 1.0} * (f.A_inst_dc - f.A_inst_dcb);
  return FormAtPoint::one_form(frames::ov(), {a1, a2, Complex{f.A_sf_dtheta_e, 0.0}, 0.0});
}

namespace {

// V and the connection as fields on the flat 3-space (c1, c2, y) with
// y = theta_e / 2piR; third covector component rescaled accordingly.
struct Flat3Fields {
  double V;
  std::array<double, 3> A;
};

Flat3Fields flat3(const std::array<double, 3>& x, const OVPoint& p0, const HarmonicInvariant& s,
                  const ModelParams& params) {
  OVPoint p = p0;
  p.base.c1 = x[0];
  p.base.c2 = x[1];
  p.theta_e = 2.0 * M_PI * params.R * x[2];
  const OoguriVafaField f = ov_potential(p, s, params);
  const Complex a1 = f.A_inst_dc + f.A_inst_dcb;
  const Complex a2 = Complex{0.0, 1.0} * (f.A_inst_dc - f.A_inst_dcb);
  return {f.V, {a1.real(), a2.real(), 2.0 * M_PI * params.R * f.A_sf_dtheta_e}};
}

}  // namespace

double connection_residual(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                           double h) {
  if (p.base.abs() == 0.0) throw DomainError("connection_residual: c = 0");
  const std::array<double, 3> x0{p.base.c1, p.base.c2, p.theta_e / (2.0 * M_PI * params.R)};
  double dV[3];
  double dA[3][3];  // dA[i][j] = d A_j / d x_i
  for (int i = 0; i < 3; ++i) {
    auto central = [&](double step, double* v, double* a) {
      std::array<double, 3> xp = x0, xm = x0;
      xp[i] += step;
      xm[i] -= step;
      const Flat3Fields fp = flat3(xp, p, s, params);
      const Flat3Fields fm = flat3(xm, p, s, params);
      *v = (fp.V - fm.V) / (2.0 * step);
      for (int j = 0; j < 3; ++j) a[j] = (fp.A[j] - fm.A[j]) / (2.0 * step);
    };
    double v1, v2, a1[3], a2[3];
    central(h, &v1, a1);
    central(h / 2.0, &v2, a2);
    dV[i] = (4.0 * v2 - v1) / 3.0;
    for (int j = 0; j < 3; ++j) dA[i][j] = (4.0 * a2[j] - a1[j]) / 3.0;
  }
  // dA = *dV with orientation (c1, c2, y):
  //   dc1^dc2 : d1 A2 - d2 A1 = dV/dy
  //   dc1^dy  : d1 Ay - dy A1 = -dV/dc2
  //   dc2^dy  : d2 Ay - dy A2 = dV/dc1
  const double r1 = (dA[0][1] - dA[1][0]) - dV[2];
  const double r2 = (dA[0][2] - dA[2][0]) + dV[1];
  const double r3 = (dA[1][2] - dA[2][1]) - dV[0];
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

double potential_laplacian(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                           double h) {
  const std::array<double, 3> x0{p.base.c1, p.base.c2, p.theta_e / (2.0 * M_PI * params.R)};
  const double v0 = flat3(x0, p, s, params).V;
  auto laplacian = [&](double step) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      std::array<double, 3> xp = x0, xm = x0;
      xp[i] += step;
      xm[i] -= step;
      acc += (flat3(xp, p, s, params).V - 2.0 * v0 + flat3(xm, p, s, params).V) / (step * step);
    }
    return acc;
  };
  return (16.0 * laplacian(h / 2.0) - laplacian(h)) / 15.0;
}

double sigma_correction(const OVPoint& p, const ModelParams& params, const SeriesControl& series) {
  if (p.base.abs() == 0.0) throw DomainError("sigma_correction: c = 0");
  double acc = 0.0;
  for (int n = 1; n <= series.max_terms; ++n) {
    const double k = special::bessel_k0(2.0 * M_PI * params.R * n * p.base.abs());
    acc += std::sin(n * p.theta_e) / n * k;
    if (n >= series.min_terms && k < series.tol) break;
  }
  return acc / M_PI;
}

ActionAngle ov_action_angle(const OVPoint& p, const HarmonicInvariant& s,
                            const ModelParams& params) {
  const InvariantValues v = s.eval(p.base);
  const double lam = v.S1 - std::log(p.base.abs());
  if (!(lam > 0.0)) throw DomainError("ov_action_angle: degenerate lattice stretch");
  const double mu = v.S2 + p.base.arg();
  const double sig = sigma_correction(p, params);
  const Complex cc = p.base.c();
  ActionAngle out;
  out.z_m = ((cc - cc * p.base.log()).real() + v.S) / (2.0 * M_PI);
  out.z_e = p.base.c2;
  out.theta_e = p.theta_e + 2.0 * M_PI * sig / lam;
  out.theta_m = -p.theta_m - sig * mu / lam;
  return out;
}

FormAtPoint omega0_form(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params) {
  const OoguriVafaField f = ov_potential(p, s, params);
  const Complex a1 = f.A_inst_dc + f.A_inst_dcb;
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  // frame (c1, c2, theta_e, theta_m); the dc2 component of A0 drops
  // against dc2 ^ dc2
  w(1, 3) = -1.0;                               // -2pi dc2 ^ dtheta_m/2pi
  w(1, 0) = -2.0 * M_PI * a1.real();            // -2pi dc2 ^ A0
  w(1, 2) = -2.0 * M_PI * f.A_sf_dtheta_e;
  w(0, 2) = f.V / params.R;                     // -2pi V d(theta_e/2piR) ^ dc1
  w -= Eigen::Matrix4cd(w.transpose());
  return FormAtPoint::from_matrix(frames::ov(), w);
}

double omega0_residual(const OVPoint& p, const HarmonicInvariant& s, const ModelParams& params,
                       double h) {
  const FormAtPoint lhs = omega0_form(p, s, params);
  auto aa = [&](const std::array<double, 4>& d) {
    OVPoint q = p;
    q.base.c1 += d[0];
    q.base.c2 += d[1];
    q.theta_e += d[2];
    q.theta_m += d[3];
    return ov_action_angle(q, s, params);
  };
  Eigen::Matrix4d jac;
  for (int j = 0; j < 4; ++j) {
    std::array<double, 4> d{};
    d[j] = h;
    const ActionAngle plus = aa(d);
    d[j] = -h;
    const ActionAngle minus = aa(d);
    jac(0, j) = (plus.z_m - minus.z_m) / (2.0 * h);
    jac(1, j) = (plus.z_e - minus.z_e) / (2.0 * h);
    jac(2, j) = (plus.theta_e - minus.theta_e) / (2.0 * h);
    jac(3, j) = (plus.theta_m - minus.theta_m) / (2.0 * h);
  }
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 2) = 1.0;  // dz_m ^ dtheta_e~
  w(2, 0) = -1.0;
  w(1, 3) = 1.0;  // dz_e ^ dtheta_m~
  w(3, 1) = -1.0;
  const FormAtPoint rhs = pullback(FormAtPoint::from_matrix(frames::r4(), w), jac, frames::ov());
  return (lhs - rhs).max_abs();
}

MetricAtPoint gibbons_hawking_metric(const OVPoint& p, const HarmonicInvariant& s,
                                     const ModelParams& params) {
  if (p.base.abs() == 0.0) throw DomainError("gibbons_hawking_metric: c = 0");
  // check positivity on the lattice route first: near the theta_e axis it
  // converges where the Bessel-route connection series cannot
  {
    const InvariantValues v = s.eval(p.base);
    const double lattice_V =
        (params.R / (4.0 * M_PI)) *
        (regularized_theta_sum(params.R * p.base.abs(), p.theta_e / (2.0 * M_PI)) +
         2.0 * v.S1 - 2.0 * (std::log(2.0) - kEulerGamma - std::log(params.R)));
    if (!(lattice_V > 0.0)) {
      throw PositivityError("gibbons_hawking_metric: potential not positive");
    }
  }
  const OoguriVafaField f = ov_potential(p, s, params);
  if (!(f.V > 0.0)) throw PositivityError("gibbons_hawking_metric: potential not positive");
  const Complex a1 = f.A_inst_dc + f.A_inst_dcb;
  const Complex a2 = Complex{0.0, 1.0} * (f.A_inst_dc - f.A_inst_dcb);
  const double tpr = 2.0 * M_PI * params.R;
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = f.V;
  g(1, 1) = f.V;
  g(2, 2) = f.V / (tpr * tpr);
  Eigen::Vector4d b{a1.real(), a2.real(), f.A_sf_dtheta_e, 1.0 / (2.0 * M_PI)};
  g += b * b.transpose() / f.V;
  return {frames::ov(), g};
}

double positivity_margin(const HarmonicInvariant& s, const ModelParams& params, int scan_points) {
  (void)params;  // the axis margin is R-independent
  const double s1_at_zero = s.f_prime(Complex{0.0, 0.0}).real();
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k < scan_points; ++k) {
    const double tau = static_cast<double>(k) / scan_points;  // theta_e / 2pi
    best = std::min(best, 0.5 * regularized_theta_sum(0.0, tau));
  }
  return s1_at_zero + best;
}

}  // namespace ffhk::ooguri_vafa
