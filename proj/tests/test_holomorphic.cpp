#include <cmath>

#include <doctest.h>

#include "ffhk/errors.hpp"
#include "ffhk/holomorphic.hpp"
#include "ffhk/invariant.hpp"
#include "ffhk/local_model.hpp"

using ffhk::BasePoint;
using ffhk::Chart;
using ffhk::Complex;
using ffhk::HarmonicInvariant;
namespace hol = ffhk::holomorphic;

TEST_SUITE("holomorphic") {

TEST_CASE("central charges at c = 1 with S = 0") {
  const HarmonicInvariant s({}, 5.0);
  const auto z = hol::central_charges({1.0, 0.0, Chart::Principal}, s);
  CHECK(std::abs(z.Z_m - 1.0 / (2.0 * M_PI)) < 1e-15);
  CHECK(std::abs(z.Z_e - Complex{0.0, -1.0}) < 1e-15);
}

TEST_CASE("real parts recover the action coordinates") {
  const HarmonicInvariant s({Complex{0.15, -0.1}});
  const BasePoint c{0.13, 0.21, Chart::Principal};
  const auto z = hol::central_charges(c, s);
  const auto aa = ffhk::local_model::action_angle(c, {0.0, 0.0}, s);
  CHECK(z.Z_m.real() == doctest::Approx(aa.z_m).epsilon(1e-13));
  CHECK(z.Z_e.real() == doctest::Approx(aa.z_e).epsilon(1e-13));
}

TEST_CASE("dZ_m/dc matches finite differences on the branch") {
  const HarmonicInvariant s({Complex{0.1, 0.07}});
  const BasePoint c{0.2, 0.12, Chart::Principal};
  const auto z = hol::central_charges(c, s);
  const double h = 1e-6;
  const auto px = hol::central_charges({c.c1 + h, c.c2, c.chart}, s);
  const auto mx = hol::central_charges({c.c1 - h, c.c2, c.chart}, s);
  const auto py = hol::central_charges({c.c1, c.c2 + h, c.chart}, s);
  const auto my = hol::central_charges({c.c1, c.c2 - h, c.chart}, s);
  const Complex dx = (px.Z_m - mx.Z_m) / (2.0 * h);
  const Complex dy = (py.Z_m - my.Z_m) / (2.0 * h);
  CHECK(std::abs(dx - z.dZ_m_dc) < 1e-8);
  // holomorphy: d/dc2 = i d/dc1
  CHECK(std::abs(dy - Complex{0.0, 1.0} * dx) < 1e-8);
}

TEST_CASE("charges blow up logarithmically, not at the origin branch point") {
  CHECK_THROWS_AS(hol::central_charges({0.0, 0.0, Chart::Principal}, HarmonicInvariant{}),
                  ffhk::DomainError);
}

TEST_CASE("volume normalization of the holomorphic 2-form") {
  const auto omega = hol::holomorphic_form();
  // Omega ^ conj(Omega) = -4 dvol in the flow-time frame
  CHECK(std::abs(hol::omega_wedge_conjugate(omega) - Complex{-4.0, 0.0}) < 1e-14);
  const HarmonicInvariant s({Complex{0.05, 0.1}});
  const BasePoint c{0.18, -0.06, Chart::Principal};
  const auto in_angle = hol::holomorphic_form_angle(c, 0.7, s);
  const double lam = ffhk::lattice_stretch(s, c);
  // the angle frame rescales the volume by the inverse lattice density
  CHECK(std::abs(hol::omega_wedge_conjugate(in_angle) - Complex{2.0 / M_PI * lam, 0.0}) <
        1e-12);
}

}  // TEST_SUITE
