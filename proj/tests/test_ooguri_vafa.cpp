#include <cmath>

#include <doctest.h>

#include "ffhk/errors.hpp"
#include "ffhk/ooguri_vafa.hpp"

using ffhk::BasePoint;
using ffhk::Chart;
using ffhk::Complex;
using ffhk::HarmonicInvariant;
using ffhk::ModelParams;
using ffhk::OVPoint;
namespace ov = ffhk::ooguri_vafa;

TEST_SUITE("ooguri_vafa") {

TEST_CASE("lattice and Bessel routes agree away from the axis") {
  const HarmonicInvariant s({Complex{0.1, 0.06}});
  const ModelParams params{1.2, 0.5};
  const OVPoint p{{0.21, -0.13, Chart::Principal}, 0.9, 0.0};
  const auto f = ov::ov_potential(p, s, params);
  CHECK(f.V == doctest::Approx(f.V_sf + f.V_inst).epsilon(1e-10));
}

TEST_CASE("symmetries: V even and sigma odd in theta_e") {
  const HarmonicInvariant s;
  const ModelParams params{1.0, 0.5};
  const BasePoint c{0.15, 0.05, Chart::Principal};
  const auto plus = ov::ov_potential({c, 1.1, 0.0}, s, params);
  const auto minus = ov::ov_potential({c, -1.1, 0.0}, s, params);
  CHECK(plus.V == doctest::Approx(minus.V).epsilon(1e-13));
  CHECK(plus.sigma == doctest::Approx(-minus.sigma).epsilon(1e-13));
  CHECK(ov::sigma_correction({c, 0.0, 0.0}, params) == 0.0);
}

TEST_CASE("instanton terms decay exponentially in R|c|") {
  const ModelParams params{1.0, 20.0};
  const HarmonicInvariant s({}, 20.0);
  const auto near = ov::ov_potential({{5.0, 0.0, Chart::Principal}, 0.7, 0.0}, s, params);
  const auto far = ov::ov_potential({{10.0, 0.0, Chart::Principal}, 0.7, 0.0}, s, params);
  // ratio ~ e^{-2pi * 5} modulo algebraic prefactors
  CHECK(std::abs(far.V_inst) < std::abs(near.V_inst) * 1e-11);
  CHECK(std::abs(far.A_inst_dc) < std::abs(near.A_inst_dc) * 1e-11);
}

TEST_CASE("potential is harmonic and dA = *dV on the flat 3-space") {
  const HarmonicInvariant s({Complex{0.08, -0.03}});
  const ModelParams params{1.0, 0.5};
  const OVPoint p{{0.19, 0.12, Chart::Principal}, 1.3, 0.0};
  CHECK(std::abs(ov::potential_laplacian(p, s, params)) < 1e-5);
  CHECK(ov::connection_residual(p, s, params) < 1e-6);
}

TEST_CASE("axis potential: finite lattice route, Bessel route NaN") {
  const HarmonicInvariant s;
  const ModelParams params{1.0, 0.5};
  const auto f = ov::ov_potential({{0.0, 0.0, Chart::Principal}, M_PI, 0.0}, s, params);
  CHECK(std::isfinite(f.V));
  // V(0, pi) = (R/4pi)[4 ln 2 - 2(ln 2 - gamma - ln R)]
  const double gamma = 0.5772156649015329;
  CHECK(f.V ==
        doctest::Approx((2.0 * std::log(2.0) + 2.0 * gamma) / (4.0 * M_PI)).epsilon(1e-10));
  CHECK(std::isnan(f.V_inst));
  CHECK_THROWS_AS(ov::ov_potential({{0.0, 0.0, Chart::Principal}, 0.0, 0.0}, s, params),
                  ffhk::SingularityError);
}

TEST_CASE("positivity margin of the trivial invariant") {
  const ModelParams params{1.0, 0.5};
  CHECK(ov::positivity_margin(HarmonicInvariant{}, params) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("negative invariant drives the potential negative near the axis") {
  const HarmonicInvariant s({Complex{-2.0, 0.0}});
  const ModelParams params{1.0, 0.5};
  CHECK_THROWS_AS(ov::gibbons_hawking_metric({{1e-3, 0.0, Chart::Principal}, M_PI, 0.0}, s,
                                             params),
                  ffhk::PositivityError);
  // the margin scan flags the same failure
  CHECK(ov::positivity_margin(s, params) < 0.0);
}

TEST_CASE("Gibbons-Hawking metric is positive definite when V > 0") {
  const HarmonicInvariant s;
  const ModelParams params{1.0, 0.5};
  const auto g = ov::gibbons_hawking_metric({{0.2, 0.1, Chart::Principal}, 0.8, 0.3}, s, params);
  CHECK(ffhk::sylvester_positive(g).positive);
  CHECK((g.g - g.g.transpose()).cwiseAbs().maxCoeff() < 1e-15);
}

}  // TEST_SUITE
