#pragma once

#include "ffhk/forms.hpp"
#include "ffhk/invariant.hpp"

namespace ffhk {

/// Central charges of the magnetic / electric cycles at a base point.
struct CentralCharge {
  Complex Z_m;
  Complex Z_e;
  Complex dZ_m_dc;  ///< derivative of Z_m on the declared branch
};

namespace holomorphic {

/// Z_m = (c - c ln c + S + i S_tilde) / 2pi, Z_e = -i c; z_m = Re Z_m,
/// z_e = Re Z_e recover the action coordinates.
CentralCharge central_charges(const BasePoint& c, const HarmonicInvariant& s);

/// The holomorphic symplectic form dz_1 ^ dz_2 pulled back through the
/// section parametrization: (dc1 + i dc2) ^ (dt1 - i dt2), constant in
/// the flow-time frame.
FormAtPoint holomorphic_form();

/// The same form in the angle frame (c1, c2, theta_m, theta_e); depends
/// on the point through the lattice and its derivatives.
FormAtPoint holomorphic_form_angle(const BasePoint& c, double theta_e,
                                   const HarmonicInvariant& s);

/// Volume coefficient of Omega ^ conj(Omega) in the frame of omega.
Complex omega_wedge_conjugate(const FormAtPoint& omega);

}  // namespace holomorphic
}  // namespace ffhk
