#pragma once

#include <functional>
#include <utility>

#include "ffhk/forms.hpp"
#include "ffhk/invariant.hpp"

namespace ffhk {

/// Fiber point as flow times from the section (c, 1).
struct FiberPoint {
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Lattice of flow times fixing a fiber point.
struct PeriodLattice {
  std::array<double, 2> gen1;  ///< (S1 - ln|c|, S2 + arg c)
  std::array<double, 2> gen2;  ///< (0, 2pi)
};

/// Action-angle coordinates of the local model.
struct ActionAngle {
  double z_m = 0.0;
  double z_e = 0.0;
  double theta_e = 0.0;
  double theta_m = 0.0;
};

/// Arbitrary smooth S(c1, c2) given as a black box; used only by the
/// gluing compatibility gate, which must reject non-harmonic inputs.
using ScalarField = std::function<double(double, double)>;

namespace local_model {

/// pi_can(z1, z2) = z1 z2.
BasePoint fibration(Complex z1, Complex z2, Chart chart = Chart::Principal);

/// Joint Hamiltonian flow: (e^{t1 - i t2} z1, e^{-t1 + i t2} z2).
std::pair<Complex, Complex> flow(Complex z1, Complex z2, double t1, double t2);

/// Gluing symplectomorphism psi(z1, z2) = (e^{S1-iS2}/z2, e^{-S1+iS2} z1 z2^2).
std::pair<Complex, Complex> glue_map(Complex z1, Complex z2, const HarmonicInvariant& s);

/// T(c; t1, t2) = (c e^{-t1 + i t2}, e^{t1 - i t2}).
std::pair<Complex, Complex> parametrize(const BasePoint& c, const FiberPoint& t);

PeriodLattice period_lattice(const BasePoint& c, const HarmonicInvariant& s);

/// The action-angle coordinates on the regular part; throws DomainError
/// when the lattice degenerates (S1 <= ln|c|).
ActionAngle action_angle(const BasePoint& c, const FiberPoint& t, const HarmonicInvariant& s);

/// Max coefficient discrepancy between T*(omega_can), computed through the
/// Jacobian of parametrize, and the action-angle symplectic form computed
/// through a finite-difference Jacobian of action_angle.
double symplectic_identity_residual(const BasePoint& c, const FiberPoint& t,
                                    const HarmonicInvariant& s, double h = 1e-5);

/// T*(omega_can) as a 2-form in the (c, t) frame (exact Jacobian route).
FormAtPoint pullback_omega_can(const BasePoint& c, const FiberPoint& t);

/// Cauchy-Riemann residual of the gluing factor e^{S1 - i S2} in zbar_1,
/// zbar_2 through c = z1 z2, with S an arbitrary scalar field evaluated
/// by finite differences. Small iff S is harmonic near c.
double gluing_cr_residual(const ScalarField& s, Complex z1, Complex z2, double h = 1e-3);

/// Same gate for a HarmonicInvariant (passes by construction).
double gluing_cr_residual(const HarmonicInvariant& s, Complex z1, Complex z2, double h = 1e-3);

}  // namespace local_model
}  // namespace ffhk
