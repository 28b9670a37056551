#include "ffhk/forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ffhk/errors.hpp"

namespace ffhk {

namespace frames {
Frame ct() { return {{"c1", "c2", "t1", "t2"}}; }
Frame c_theta() { return {{"c1", "c2", "theta_m", "theta_e"}}; }
Frame ov() { return {{"c1", "c2", "theta_e", "theta_m"}}; }
Frame r4() { return {{"x0", "x1", "x2", "x3"}}; }
}  // namespace frames

namespace {

// Increasing multi-indices per degree, lexicographic.
const std::vector<std::vector<int>>& combos(int degree) {
  static const std::vector<std::vector<std::vector<int>>> tables = {
      {{}},
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      {{0, 1, 2, 3}},
  };
  return tables[degree];
}

int combo_index(int degree, const std::vector<int>& sorted) {
  const auto& table = combos(degree);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == sorted) return static_cast<int>(i);
  }
  throw std::invalid_argument("FormAtPoint: bad multi-index");
}

// Merge two disjoint increasing index lists; returns permutation sign,
// or 0 if they intersect.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (std::size_t j = i; j > 0 && out[j] < out[j - 1]; --j) {
      std::swap(out[j], out[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] == out[i - 1]) return 0;
  }
  return sign;
}

}  // namespace

FormAtPoint::FormAtPoint(int degree, Frame frame)
    : degree_(degree), frame_(std::move(frame)) {
  if (degree < 0 || degree > 4) throw std::invalid_argument("FormAtPoint: degree must be 0..4");
  coeffs_.assign(combos(degree).size(), Complex{0.0, 0.0});
}

FormAtPoint FormAtPoint::scalar(Frame frame, Complex value) {
  FormAtPoint f(0, std::move(frame));
  f.coeffs_[0] = value;
  return f;
}

FormAtPoint FormAtPoint::one_form(Frame frame, const std::array<Complex, 4>& coeffs) {
  FormAtPoint f(1, std::move(frame));
  for (int i = 0; i < 4; ++i) f.coeffs_[i] = coeffs[i];
  return f;
}

FormAtPoint FormAtPoint::basis(Frame frame, const std::vector<int>& indices) {
  FormAtPoint f(static_cast<int>(indices.size()), std::move(frame));
  f.coeffs_[combo_index(f.degree_, indices)] = 1.0;
  return f;
}

FormAtPoint FormAtPoint::from_matrix(Frame frame, const Eigen::Matrix4cd& w) {
  if ((w + w.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + w.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("FormAtPoint::from_matrix: matrix not antisymmetric");
  }
  FormAtPoint f(2, std::move(frame));
  const auto& table = combos(2);
  for (std::size_t i = 0; i < table.size(); ++i) {
    f.coeffs_[i] = w(table[i][0], table[i][1]);
  }
  return f;
}

Complex FormAtPoint::component(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != degree_) {
    throw std::invalid_argument("FormAtPoint::component: wrong index count");
  }
  return coeffs_[combo_index(degree_, indices)];
}

Eigen::Matrix4cd FormAtPoint::matrix() const {
  if (degree_ != 2) throw std::invalid_argument("FormAtPoint::matrix: degree must be 2");
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  const auto& table = combos(2);
  for (std::size_t i = 0; i < table.size(); ++i) {
    w(table[i][0], table[i][1]) = coeffs_[i];
    w(table[i][1], table[i][0]) = -coeffs_[i];
  }
  return w;
}

Complex FormAtPoint::volume_coefficient() const {
  if (degree_ != 4) throw std::invalid_argument("volume_coefficient: degree must be 4");
  return coeffs_[0];
}

FormAtPoint FormAtPoint::real_part() const {
  FormAtPoint f(degree_, frame_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) f.coeffs_[i] = coeffs_[i].real();
  return f;
}

FormAtPoint FormAtPoint::imag_part() const {
  FormAtPoint f(degree_, frame_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) f.coeffs_[i] = coeffs_[i].imag();
  return f;
}

FormAtPoint FormAtPoint::conjugate() const {
  FormAtPoint f(degree_, frame_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) f.coeffs_[i] = std::conj(coeffs_[i]);
  return f;
}

double FormAtPoint::max_abs() const {
  double m = 0.0;
  for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
  return m;
}

FormAtPoint& FormAtPoint::operator+=(const FormAtPoint& o) {
  if (degree_ != o.degree_ || !(frame_ == o.frame_)) {
    throw std::invalid_argument("FormAtPoint: degree/frame mismatch in +");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FormAtPoint& FormAtPoint::operator-=(const FormAtPoint& o) {
  if (degree_ != o.degree_ || !(frame_ == o.frame_)) {
    throw std::invalid_argument("FormAtPoint: degree/frame mismatch in -");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FormAtPoint& FormAtPoint::operator*=(Complex z) {
  for (auto& c : coeffs_) c *= z;
  return *this;
}

FormAtPoint wedge(const FormAtPoint& a, const FormAtPoint& b) {
  if (!(a.frame() == b.frame())) throw std::invalid_argument("wedge: frame mismatch");
  const int deg = a.degree() + b.degree();
  if (deg > 4) throw std::invalid_argument("wedge: degrees sum beyond 4");
  FormAtPoint out(deg, a.frame());
  const auto& ta = combos(a.degree());
  const auto& tb = combos(b.degree());
  std::vector<int> merged;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (a[static_cast<int>(i)] == Complex{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < tb.size(); ++j) {
      const int sign = merge_sign(ta[i], tb[j], merged);
      if (sign == 0) continue;
      const int idx = combo_index(deg, merged);
      out[idx] += static_cast<double>(sign) * a[static_cast<int>(i)] * b[static_cast<int>(j)];
    }
  }
  return out;
}

FormAtPoint pullback(const FormAtPoint& form, const Eigen::Matrix4d& jacobian, Frame new_frame) {
  // dx^old_i -> sum_j J_ij dx^new_j on covectors
  std::array<FormAtPoint, 4> basis_images = {
      FormAtPoint(1, new_frame), FormAtPoint(1, new_frame),
      FormAtPoint(1, new_frame), FormAtPoint(1, new_frame)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) basis_images[i][j] = jacobian(i, j);
  }
  if (form.degree() == 0) return FormAtPoint::scalar(new_frame, form[0]);
  FormAtPoint out(form.degree(), new_frame);
  const auto& table = combos(form.degree());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (form[static_cast<int>(i)] == Complex{0.0, 0.0}) continue;
    FormAtPoint prod = FormAtPoint::scalar(new_frame, 1.0);
    for (int idx : table[i]) prod = wedge(prod, basis_images[idx]);
    prod *= form[static_cast<int>(i)];
    out += prod;
  }
  return out;
}

namespace {

FormAtPoint exterior_derivative_step(
    const std::function<FormAtPoint(const std::array<double, 4>&)>& field,
    const std::array<double, 4>& at, double h) {
  const FormAtPoint probe = field(at);
  FormAtPoint out(probe.degree() + 1, probe.frame());
  const auto& table = combos(probe.degree());
  std::vector<int> merged;
  for (int j = 0; j < 4; ++j) {
    std::array<double, 4> xp = at, xm = at;
    xp[j] += h;
    xm[j] -= h;
    const FormAtPoint fp = field(xp);
    const FormAtPoint fm = field(xm);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const Complex d = (fp[static_cast<int>(i)] - fm[static_cast<int>(i)]) / (2.0 * h);
      const int sign = merge_sign({j}, table[i], merged);
      if (sign == 0) continue;
      out[combo_index(probe.degree() + 1, merged)] += static_cast<double>(sign) * d;
    }
  }
  return out;
}

}  // namespace

FormAtPoint exterior_derivative_fd(
    const std::function<FormAtPoint(const std::array<double, 4>&)>& field,
    const std::array<double, 4>& at, double h, bool richardson) {
  FormAtPoint d1 = exterior_derivative_step(field, at, h);
  if (!richardson) return d1;
  FormAtPoint d2 = exterior_derivative_step(field, at, 0.5 * h);
  d2 *= 4.0 / 3.0;
  d1 *= 1.0 / 3.0;
  return d2 - d1;
}

SylvesterResult sylvester_positive(const MetricAtPoint& m) {
  SylvesterResult r{};
  bool pos = true;
  for (int k = 1; k <= 4; ++k) {
    r.minors[k - 1] = m.g.topLeftCorner(k, k).determinant();
    pos = pos && r.minors[k - 1] > 0.0;
  }
  r.positive = pos;
  return r;
}

HyperkahlerExtraction triple_to_metric(const FormAtPoint& w1, const FormAtPoint& w2,
                                       const FormAtPoint& w3, double j_tol) {
  for (const auto* w : {&w1, &w2, &w3}) {
    if (w->degree() != 2) throw std::invalid_argument("triple_to_metric: need 2-forms");
    if (w->imag_part().max_abs() > 1e-9 * (1.0 + w->max_abs())) {
      throw std::invalid_argument("triple_to_metric: forms must be real");
    }
  }
  const Eigen::Matrix4d m1 = w1.matrix().real();
  const Eigen::Matrix4d m2 = w2.matrix().real();
  const Eigen::Matrix4d m3 = w3.matrix().real();

  Eigen::FullPivLU<Eigen::Matrix4d> lu1(m1);
  if (!lu1.isInvertible()) throw DomainError("triple_to_metric: w1 degenerate");
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(m1);
  const double cond =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);

  HyperkahlerExtraction out;
  out.condition_number = cond;
  const Eigen::Matrix4d j3 = lu1.solve(m2);  // w1^{-1} w2
  out.j_squared_residual = (j3 * j3 + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  if (out.j_squared_residual > j_tol) {
    throw DomainError("triple_to_metric: not a hyperkahler triple at this point (J^2 != -Id)");
  }
  const Eigen::Matrix4d g_raw = j3.transpose() * m3;
  const double asym = (g_raw - g_raw.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * (1.0 + g_raw.cwiseAbs().maxCoeff())) {
    throw DomainError("triple_to_metric: extracted metric asymmetric");
  }
  out.metric = {w1.frame(), 0.5 * (g_raw + g_raw.transpose())};

  // the other cyclic pairings, for callers that want all three structures
  const Eigen::Matrix4d j1 = Eigen::FullPivLU<Eigen::Matrix4d>(m2).solve(m3);
  const Eigen::Matrix4d j2 = Eigen::FullPivLU<Eigen::Matrix4d>(m3).solve(m1);
  out.complex_structures = {j1, j2, j3};
  return out;
}

}  // namespace ffhk
