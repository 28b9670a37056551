#include "ffhk/holomorphic.hpp"

#include <cmath>

#include "ffhk/errors.hpp"

namespace ffhk::holomorphic {

CentralCharge central_charges(const BasePoint& c, const HarmonicInvariant& s) {
  if (c.c() == Complex{0.0, 0.0}) throw DomainError("central_charges: c = 0");
  const Complex cc = c.c();
  const Complex logc = c.log();
  const Complex f = s.f(cc);
  CentralCharge out;
  out.Z_m = (cc - cc * logc + f) / (2.0 * M_PI);
  out.Z_e = Complex{0.0, -1.0} * cc;
  out.dZ_m_dc = (s.f_prime(cc) - logc) / (2.0 * M_PI);
  return out;
}

FormAtPoint holomorphic_form() {
  // (dc1 + i dc2) ^ (dt1 - i dt2) over (c1, c2, t1, t2).
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  const Complex i{0.0, 1.0};
  w(0, 2) = 1.0;
  w(0, 3) = -i;
  w(1, 2) = i;
  w(1, 3) = 1.0;
  w -= Eigen::Matrix4cd(w.transpose());
  return FormAtPoint::from_matrix(frames::ct(), w);
}

FormAtPoint holomorphic_form_angle(const BasePoint& c, double theta_e,
                                   const HarmonicInvariant& s) {
  const InvariantValues v = s.eval(c);
  const double r2 = c.abs() * c.abs();
  if (r2 == 0.0) throw DomainError("holomorphic_form_angle: c = 0");
  const double lam = v.S1 - std::log(c.abs());
  const double mu = v.S2 + c.arg();
  const double m = v.S11 - c.c1 / r2;
  const double n = v.S12 - c.c2 / r2;
  // t1 = lam theta_e / 2pi, t2 = theta_m + mu theta_e / 2pi;
  // d lam = m dc1 + n dc2, d mu = n dc1 - m dc2.
  const double q = theta_e / (2.0 * M_PI);
  Eigen::Matrix4d jac = Eigen::Matrix4d::Identity();  // rows (c1,c2,t1,t2), cols (c1,c2,tm,te)
  jac(2, 0) = q * m;
  jac(2, 1) = q * n;
  jac(2, 2) = 0.0;
  jac(2, 3) = lam / (2.0 * M_PI);
  jac(3, 0) = q * n;
  jac(3, 1) = -q * m;
  jac(3, 2) = 1.0;
  jac(3, 3) = mu / (2.0 * M_PI);
  return pullback(holomorphic_form(), jac, frames::c_theta());
}

Complex omega_wedge_conjugate(const FormAtPoint& omega) {
  return wedge(omega, omega.conjugate()).volume_coefficient();
}

}  // namespace ffhk::holomorphic
