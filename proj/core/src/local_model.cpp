#include "ffhk/local_model.hpp"

#include <cmath>

#include "ffhk/errors.hpp"

namespace ffhk::local_model {

BasePoint fibration(Complex z1, Complex z2, Chart chart) {
  const Complex c = z1 * z2;
  return {c.real(), c.imag(), chart};
}

std::pair<Complex, Complex> flow(Complex z1, Complex z2, double t1, double t2) {
  const Complex u = std::exp(Complex{t1, -t2});
  return {u * z1, z2 / u};
}

std::pair<Complex, Complex> glue_map(Complex z1, Complex z2, const HarmonicInvariant& s) {
  if (z2 == Complex{0.0, 0.0}) throw DomainError("glue_map: z2 = 0 is not in the domain");
  const BasePoint c = fibration(z1, z2);
  const InvariantValues v = s.eval(c);
  const Complex g = std::exp(Complex{v.S1, -v.S2});
  return {g / z2, z1 * z2 * z2 / g};
}

std::pair<Complex, Complex> parametrize(const BasePoint& c, const FiberPoint& t) {
  if (c.c() == Complex{0.0, 0.0}) {
    throw DomainError("parametrize: the section misses the singular fiber");
  }
  const Complex u = std::exp(Complex{t.t1, -t.t2});
  return {c.c() / u, u};
}

PeriodLattice period_lattice(const BasePoint& c, const HarmonicInvariant& s) {
  return {{lattice_stretch(s, c), lattice_shear(s, c)}, {0.0, 2.0 * M_PI}};
}

ActionAngle action_angle(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s) {
  const InvariantValues v = s.eval(c);
  const double lam = v.S1 - std::log(c.abs());
  if (!(lam > 0.0)) {
    throw DomainError("action_angle: degenerate period lattice (S1 <= ln|c|)");
  }
  const double mu = v.S2 + c.arg();
  ActionAngle out;
  out.z_m = (-std::log(c.abs()) * c.c1 + c.arg() * c.c2 + c.c1 + v.S) / (2.0 * M_PI);
  out.z_e = c.c2;
  out.theta_e = 2.0 * M_PI * t.t1 / lam;
  out.theta_m = t.t2 - mu * t.t1 / lam;
  return out;
}

FormAtPoint pullback_omega_can(const BasePoint& c, const FiberPoint& t) {
  // omega_can = Re(dz1 ^ dz2) = dx1 ^ dx2 - dy1 ^ dy2 on (x1, y1, x2, y2).
  const auto [z1, z2] = parametrize(c, t);
  // Columns: derivatives of (z1, z2) in (c1, c2, t1, t2).
  const Complex dz1[4] = {z1 / c.c(), Complex{0.0, 1.0} * z1 / c.c(), -z1,
                          Complex{0.0, 1.0} * z1};
  const Complex dz2[4] = {0.0, 0.0, z2, Complex{0.0, -1.0} * z2};
  Eigen::Matrix4d jac;
  for (int j = 0; j < 4; ++j) {
    jac(0, j) = dz1[j].real();
    jac(1, j) = dz1[j].imag();
    jac(2, j) = dz2[j].real();
    jac(3, j) = dz2[j].imag();
  }
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 2) = 1.0;
  w(2, 0) = -1.0;
  w(1, 3) = -1.0;
  w(3, 1) = 1.0;
  return pullback(FormAtPoint::from_matrix(frames::r4(), w), jac, frames::ct());
}

double symplectic_identity_residual(const BasePoint& c, const FiberPoint& t,
                                    const HarmonicInvariant& s, double h) {
  const FormAtPoint lhs = pullback_omega_can(c, t);

  // FD Jacobian of (z_m, z_e, theta_e, theta_m) in (c1, c2, t1, t2).
  auto aa = [&](double d1, double d2, double d3, double d4) {
    return action_angle({c.c1 + d1, c.c2 + d2, c.chart}, {t.t1 + d3, t.t2 + d4}, s);
  };
  Eigen::Matrix4d jac;
  for (int j = 0; j < 4; ++j) {
    double d[4] = {0.0, 0.0, 0.0, 0.0};
    d[j] = h;
    const ActionAngle plus = aa(d[0], d[1], d[2], d[3]);
    const ActionAngle minus = aa(-d[0], -d[1], -d[2], -d[3]);
    jac(0, j) = (plus.z_m - minus.z_m) / (2.0 * h);
    jac(1, j) = (plus.z_e - minus.z_e) / (2.0 * h);
    jac(2, j) = (plus.theta_e - minus.theta_e) / (2.0 * h);
    jac(3, j) = (plus.theta_m - minus.theta_m) / (2.0 * h);
  }
  // dz_m ^ dtheta_e + dz_e ^ dtheta_m over (z_m, z_e, theta_e, theta_m).
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 2) = 1.0;
  w(2, 0) = -1.0;
  w(1, 3) = 1.0;
  w(3, 1) = -1.0;
  const FormAtPoint rhs = pullback(FormAtPoint::from_matrix(frames::r4(), w), jac, frames::ct());
  return (lhs - rhs).max_abs();
}

namespace {

// S1 - i S2 of a black-box field at c, by central differences.
Complex field_gradient(const ScalarField& s, Complex c, double h) {
  const double s1 = (s(c.real() + h, c.imag()) - s(c.real() - h, c.imag())) / (2.0 * h);
  const double s2 = (s(c.real(), c.imag() + h) - s(c.real(), c.imag() - h)) / (2.0 * h);
  return {s1, -s2};
}

}  // namespace

double gluing_cr_residual(const ScalarField& s, Complex z1, Complex z2, double h) {
  if (z2 == Complex{0.0, 0.0}) throw DomainError("gluing_cr_residual: z2 = 0");
  const double hs = h;  // inner step for the gradient of S
  auto factor = [&](Complex w1, Complex w2) {
    return std::exp(field_gradient(s, w1 * w2, hs));
  };
  const Complex g0 = factor(z1, z2);
  const double scale = std::abs(g0);
  if (scale == 0.0) throw NumericalError("gluing_cr_residual: vanishing gluing factor");

  // d/dzbar = (d/dx + i d/dy) / 2, Richardson-extrapolated central differences.
  auto dzbar = [&](bool first, double step) {
    auto at = [&](double dx, double dy) {
      const Complex d{dx, dy};
      return first ? factor(z1 + d, z2) : factor(z1, z2 + d);
    };
    const Complex ddx = (at(step, 0.0) - at(-step, 0.0)) / (2.0 * step);
    const Complex ddy = (at(0.0, step) - at(0.0, -step)) / (2.0 * step);
    return (ddx + Complex{0.0, 1.0} * ddy) / 2.0;
  };
  double worst = 0.0;
  for (bool first : {true, false}) {
    const Complex coarse = dzbar(first, h);
    const Complex fine = dzbar(first, h / 2.0);
    const Complex extrap = (4.0 * fine - coarse) / 3.0;
    worst = std::max(worst, std::abs(extrap) / scale);
  }
  return worst;
}

double gluing_cr_residual(const HarmonicInvariant& s, Complex z1, Complex z2, double h) {
  ScalarField field = [&s](double x, double y) { return s.f(Complex{x, y}).real(); };
  return gluing_cr_residual(field, z1, z2, h);
}

}  // namespace ffhk::local_model
