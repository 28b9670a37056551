#include <cmath>

#include <doctest.h>

#include "ffhk/errors.hpp"
#include "ffhk/forms.hpp"

using ffhk::Complex;
using ffhk::FormAtPoint;
using ffhk::Frame;

namespace {

FormAtPoint pair_form(const Frame& f, int a, int b, int c, int d) {
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(a, b) = 1.0;
  w(b, a) = -1.0;
  w(c, d) = 1.0;
  w(d, c) = -1.0;
  return FormAtPoint::from_matrix(f, w);
}

}  // namespace

TEST_SUITE("forms") {

TEST_CASE("wedge algebra on basis forms") {
  const Frame f = ffhk::frames::r4();
  const FormAtPoint dx0 = FormAtPoint::basis(f, {0});
  const FormAtPoint dx1 = FormAtPoint::basis(f, {1});
  const FormAtPoint dx23 = FormAtPoint::basis(f, {2, 3});

  const FormAtPoint w01 = ffhk::wedge(dx0, dx1);
  CHECK(w01.component({0, 1}) == Complex{1.0, 0.0});
  const FormAtPoint w10 = ffhk::wedge(dx1, dx0);
  CHECK(w10.component({0, 1}) == Complex{-1.0, 0.0});

  const FormAtPoint vol = ffhk::wedge(w01, dx23);
  CHECK(vol.volume_coefficient() == Complex{1.0, 0.0});
  // odd permutation of the volume element
  const FormAtPoint w02 = ffhk::wedge(dx0, FormAtPoint::basis(f, {2}));
  CHECK(ffhk::wedge(w02, FormAtPoint::basis(f, {1, 3})).volume_coefficient() ==
        Complex{-1.0, 0.0});
  // dx ^ dx = 0
  CHECK(ffhk::wedge(dx0, dx0).max_abs() == 0.0);
}

TEST_CASE("matrix round trip") {
  const Frame f = ffhk::frames::ct();
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w(0, 2) = Complex{1.5, -0.5};
  w(2, 0) = -w(0, 2);
  w(1, 3) = Complex{0.0, 2.0};
  w(3, 1) = -w(1, 3);
  const FormAtPoint form = FormAtPoint::from_matrix(f, w);
  CHECK((form.matrix() - w).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pullback through a linear map") {
  const Frame f = ffhk::frames::r4();
  // phi(x) = J x with J = [[2,1],[0,3]] on the first two coordinates:
  // phi*(dx0 ^ dx1) = det * dx0 ^ dx1
  Eigen::Matrix4d J = Eigen::Matrix4d::Identity();
  J(0, 0) = 2.0;
  J(0, 1) = 1.0;
  J(1, 1) = 3.0;
  const FormAtPoint w01 = ffhk::wedge(FormAtPoint::basis(f, {0}), FormAtPoint::basis(f, {1}));
  const FormAtPoint back = ffhk::pullback(w01, J, f);
  CHECK(back.component({0, 1}) == Complex{6.0, 0.0});
  // 1-form: phi*(dx0) = 2 dx0 + 1 dx1
  const FormAtPoint one = ffhk::pullback(FormAtPoint::basis(f, {0}), J, f);
  CHECK(one.component({0}) == Complex{2.0, 0.0});
  CHECK(one.component({1}) == Complex{1.0, 0.0});
}

TEST_CASE("finite-difference exterior derivative") {
  const Frame f = ffhk::frames::r4();
  // alpha = x0 x1 dx2 has d(alpha) = x1 dx0^dx2 + x0 dx1^dx2
  auto field = [&](const std::array<double, 4>& x) {
    FormAtPoint a(1, f);
    a[2] = x[0] * x[1];
    return a;
  };
  const std::array<double, 4> at{0.7, -0.3, 0.2, 0.1};
  const FormAtPoint da = ffhk::exterior_derivative_fd(field, at);
  CHECK(da.component({0, 2}).real() == doctest::Approx(at[1]).epsilon(1e-8));
  CHECK(da.component({1, 2}).real() == doctest::Approx(at[0]).epsilon(1e-8));
  CHECK(std::abs(da.component({0, 1})) < 1e-10);
  // d^2 = 0 on an exact form: d(x0 dx0) = 0
  auto exact = [&](const std::array<double, 4>& x) {
    FormAtPoint a(1, f);
    a[0] = x[0];
    return a;
  };
  CHECK(ffhk::exterior_derivative_fd(exact, at).max_abs() < 1e-10);
}

TEST_CASE("Sylvester minors") {
  ffhk::MetricAtPoint m{ffhk::frames::r4(), Eigen::Matrix4d::Identity()};
  m.g(3, 3) = -2.0;
  const auto r = ffhk::sylvester_positive(m);
  CHECK(r.minors[0] == 1.0);
  CHECK(r.minors[3] == -2.0);
  CHECK_FALSE(r.positive);
  m.g(3, 3) = 2.0;
  CHECK(ffhk::sylvester_positive(m).positive);
}

TEST_CASE("flat quaternionic triple extracts the identity metric") {
  const Frame f = ffhk::frames::r4();
  const FormAtPoint w1 = pair_form(f, 0, 1, 2, 3);
  const FormAtPoint w2 = pair_form(f, 0, 2, 3, 1);
  const FormAtPoint w3 = pair_form(f, 0, 3, 1, 2);
  const auto ex = ffhk::triple_to_metric(w1, w2, w3);
  CHECK((ex.metric.g - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ex.j_squared_residual < 1e-14);
  // the reversed orientation is not quaternionic and must be rejected
  const FormAtPoint bad2 = pair_form(f, 0, 2, 1, 3);
  CHECK_THROWS_AS(ffhk::triple_to_metric(w1, bad2, w3), ffhk::DomainError);
}

}  // TEST_SUITE
