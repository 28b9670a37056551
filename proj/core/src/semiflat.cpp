#include "ffhk/semiflat.hpp"

#include <cmath>

#include "ffhk/errors.hpp"
#include "ffhk/holomorphic.hpp"

namespace ffhk::semiflat {

SemiflatCoefficients semiflat_coefficients(const BasePoint& c, const FiberPoint& t,
                                           const HarmonicInvariant& s, const ModelParams& params) {
  const InvariantValues v = s.eval(c);
  const double r2 = c.abs() * c.abs();
  if (r2 == 0.0) throw DomainError("semiflat_coefficients: c = 0");
  SemiflatCoefficients out;
  out.m = v.S11 - c.c1 / r2;
  out.n = v.S12 - c.c2 / r2;
  out.lam = v.S1 - std::log(c.abs());
  if (out.lam == 0.0) throw DomainError("semiflat_coefficients: degenerate lattice stretch");
  const double R = params.R;
  const double l = out.lam;
  out.w_c1c2 = R * l + t.t1 * t.t1 * (out.m * out.m + out.n * out.n) / (R * l * l * l);
  out.w_c1t1 = -t.t1 * out.n / (R * l * l);
  out.w_c2t1 = t.t1 * out.m / (R * l * l);
  out.w_c1t2 = t.t1 * out.m / (R * l * l);
  out.w_c2t2 = t.t1 * out.n / (R * l * l);
  out.w_t1t2 = -1.0 / (R * l);
  return out;
}

FormAtPoint semiflat_form(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s,
                          const ModelParams& params) {
  const SemiflatCoefficients sc = semiflat_coefficients(c, t, s, params);
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 1) = sc.w_c1c2;
  w(0, 2) = sc.w_c1t1;
  w(0, 3) = sc.w_c1t2;
  w(1, 2) = sc.w_c2t1;
  w(1, 3) = sc.w_c2t2;
  w(2, 3) = sc.w_t1t2;
  w -= Eigen::Matrix4cd(w.transpose());
  return FormAtPoint::from_matrix(frames::ct(), w);
}

FormAtPoint semiflat_form_definition(const BasePoint& c, const FiberPoint& t,
                                     const HarmonicInvariant& s, const ModelParams& params,
                                     double h) {
  // dZ_m, dZ_e by central differences in (c1, c2); dtheta by central
  // differences of the action-angle map in all four variables.
  auto zc = [&](double d1, double d2) {
    return holomorphic::central_charges({c.c1 + d1, c.c2 + d2, c.chart}, s);
  };
  std::array<Complex, 4> dzm{}, dze{};
  for (int j = 0; j < 2; ++j) {
    const double d1 = (j == 0) ? h : 0.0;
    const double d2 = (j == 1) ? h : 0.0;
    const CentralCharge plus = zc(d1, d2);
    const CentralCharge minus = zc(-d1, -d2);
    dzm[j] = (plus.Z_m - minus.Z_m) / (2.0 * h);
    dze[j] = (plus.Z_e - minus.Z_e) / (2.0 * h);
  }
  auto angles = [&](const std::array<double, 4>& d) {
    const ActionAngle a =
        local_model::action_angle({c.c1 + d[0], c.c2 + d[1], c.chart}, {t.t1 + d[2], t.t2 + d[3]}, s);
    return std::array<double, 2>{a.theta_m, a.theta_e};
  };
  std::array<Complex, 4> dtm{}, dte{};
  for (int j = 0; j < 4; ++j) {
    std::array<double, 4> d{};
    d[j] = h;
    const auto plus = angles(d);
    d[j] = -h;
    const auto minus = angles(d);
    dtm[j] = (plus[0] - minus[0]) / (2.0 * h);
    dte[j] = (plus[1] - minus[1]) / (2.0 * h);
  }
  const Frame fr = frames::ct();
  const FormAtPoint one_zm = FormAtPoint::one_form(fr, dzm);
  const FormAtPoint one_ze = FormAtPoint::one_form(fr, dze);
  const FormAtPoint one_tm = FormAtPoint::one_form(fr, dtm);
  const FormAtPoint one_te = FormAtPoint::one_form(fr, dte);
  FormAtPoint out = wedge(one_zm, one_ze.conjugate());
  out = (out + out.conjugate()) * Complex{0.5 * M_PI * params.R, 0.0};
  out += wedge(one_tm, one_te) * Complex{1.0 / (2.0 * M_PI * params.R), 0.0};
  return out;
}

FormAtPoint semiflat_form_angle(const BasePoint& c, const HarmonicInvariant& s,
                                const ModelParams& params) {
  const double lam = lattice_stretch(s, c);
  if (lam == 0.0) throw DomainError("semiflat_form_angle: degenerate lattice stretch");
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 1) = params.R * lam;
  w(2, 3) = 1.0 / (2.0 * M_PI * params.R);
  w -= Eigen::Matrix4cd(w.transpose());
  return FormAtPoint::from_matrix(frames::c_theta(), w);
}

MetricAtPoint semiflat_metric_matrix(const BasePoint& c, const FiberPoint& t,
                                     const HarmonicInvariant& s, const ModelParams& params) {
  const Eigen::Matrix4cd w = semiflat_form(c, t, s, params).matrix();
  Eigen::Matrix4d jv = Eigen::Matrix4d::Zero();
  jv(1, 0) = 1.0;
  jv(0, 1) = -1.0;
  jv(3, 2) = -1.0;
  jv(2, 3) = 1.0;
  const Eigen::Matrix4d g = w.real() * jv;
  const double asym = (g - Eigen::Matrix4d(g.transpose())).cwiseAbs().maxCoeff();
  if (asym > 1e-10) throw NumericalError("semiflat_metric_matrix: asymmetric result");
  return {frames::ct(), (g + Eigen::Matrix4d(g.transpose())) / 2.0};
}

SemiflatIdentityResiduals verify_quadratic_identities(const BasePoint& c, const FiberPoint& t,
                                                      const HarmonicInvariant& s,
                                                      const ModelParams& params) {
  const FormAtPoint w = semiflat_form(c, t, s, params);
  const FormAtPoint omega = holomorphic::holomorphic_form();
  SemiflatIdentityResiduals out;
  out.wedge_square = wedge(w, w).volume_coefficient() -
                     0.5 * wedge(omega, omega.conjugate()).volume_coefficient();
  out.wedge_omega = wedge(w, omega).volume_coefficient();
  out.wedge_omega_conj = wedge(w, omega.conjugate()).volume_coefficient();
  return out;
}

double decomposition_potential(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s,
                               const ModelParams& params) {
  const double lam = lattice_stretch(s, c);
  if (lam == 0.0) throw DomainError("decomposition_potential: degenerate lattice stretch");
  return t.t1 * t.t1 / (params.R * lam);
}

double decomposition_residual(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s,
                              const ModelParams& params, double h) {
  auto phi = [&](const std::array<double, 4>& x) {
    return decomposition_potential({x[0], x[1], c.chart}, {x[2], x[3]}, s, params);
  };
  const std::array<double, 4> x0{c.c1, c.c2, t.t1, t.t2};
  Eigen::Matrix4d hess;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      std::array<double, 4> x = x0;
      double val;
      if (i == j) {
        const double f0 = phi(x);
        x[i] = x0[i] + h;
        const double fp = phi(x);
        x[i] = x0[i] - h;
        const double fm = phi(x);
        val = (fp - 2.0 * f0 + fm) / (h * h);
      } else {
        auto at = [&](double di, double dj) {
          std::array<double, 4> y = x0;
          y[i] += di;
          y[j] += dj;
          return phi(y);
        };
        val = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
      }
      hess(i, j) = val;
      hess(j, i) = val;
    }
  }
  // Complex coordinates u1 = c1 + i c2, u2 = t1 - i t2, i.e. real pairs
  // (x1, y1) = (c1, c2), (x2, y2) = (t1, -t2).
  const Complex I{0.0, 1.0};
  // d/du_j = (d/dx_j - i d/dy_j)/2, d/dubar_k = (d/dx_k + i d/dy_k)/2;
  // y2 = -t2 flips the sign of every t2-derivative.
  Eigen::Matrix4d flip = Eigen::Matrix4d::Identity();
  flip(3, 3) = -1.0;
  const Eigen::Matrix4d hf = flip * hess * flip;  // now in (x1, y1, x2, y2)
  auto du = [&](int j, int k) {  // d^2 phi / du_j dubar_k, indices 0,1
    const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
    return 0.25 * (Complex{hf(xj, xk) + hf(yj, yk), 0.0} +
                   I * (hf(xj, yk) - hf(yj, xk)));
  };
  const Frame fr = frames::ct();
  // du1 = dc1 + i dc2, du2 = dt1 - i dt2 in the (c1, c2, t1, t2) frame.
  const FormAtPoint du1 = FormAtPoint::one_form(fr, {Complex{1.0, 0.0}, I, 0.0, 0.0});
  const FormAtPoint du2 = FormAtPoint::one_form(fr, {0.0, 0.0, Complex{1.0, 0.0}, -I});
  FormAtPoint iddb(2, fr);
  const FormAtPoint dus[2] = {du1, du2};
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      iddb += (I * du(j, k)) * wedge(dus[j], dus[k].conjugate());
    }
  }
  // Fiber part of the semi-flat form by the independent FD route.
  const FormAtPoint full = semiflat_form_definition(c, t, s, params);
  // Base part pi R Re(dZ_m ^ conj(dZ_e)) = R lam dc1 ^ dc2 exactly.
  Eigen::Matrix4cd base = Eigen::Matrix4cd::Zero();
  base(0, 1) = params.R * lattice_stretch(s, c);
  base(1, 0) = -base(0, 1);
  const FormAtPoint fiber = full - FormAtPoint::from_matrix(fr, base);
  return (iddb - fiber).max_abs();
}

}  // namespace ffhk::semiflat
