#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ffhk/invariant.hpp"

namespace ffhk {

/// Ordered coordinate frame on the 4-dimensional total space. All
/// coefficient tensors are relative to this order.
struct Frame {
  std::array<std::string, 4> names;
  bool operator==(const Frame&) const = default;
};

namespace frames {
/// (c1, c2, t1, t2) — flow-time fiber coordinates.
Frame ct();
/// (c1, c2, theta_m, theta_e) — angle coordinates of the local model.
Frame c_theta();
/// (c1, c2, theta_e, theta_m) — Ooguri-Vafa bundle coordinates.
Frame ov();
/// (x0, x1, x2, x3) — plain R^4.
Frame r4();
}  // namespace frames

/// A complex-valued exterior k-form at a point, stored as its C(4,k)
/// independent components over increasing multi-indices of the frame.
class FormAtPoint {
 public:
  FormAtPoint(int degree, Frame frame);

  static FormAtPoint scalar(Frame frame, Complex value);
  static FormAtPoint one_form(Frame frame, const std::array<Complex, 4>& coeffs);
  /// Basis k-form d x_{i_0} ^ ... ^ d x_{i_{k-1}} (indices strictly increasing).
  static FormAtPoint basis(Frame frame, const std::vector<int>& indices);
  /// 2-form from an antisymmetric coefficient matrix W (form(e_i, e_j) = W_ij).
  static FormAtPoint from_matrix(Frame frame, const Eigen::Matrix4cd& w);

  int degree() const { return degree_; }
  const Frame& frame() const { return frame_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Complex& operator[](int i) { return coeffs_[i]; }
  Complex operator[](int i) const { return coeffs_[i]; }

  /// Component on the (sorted) multi-index; degree must match its length.
  Complex component(const std::vector<int>& indices) const;

  /// Antisymmetric 4x4 coefficient matrix; degree must be 2.
  Eigen::Matrix4cd matrix() const;
  /// Coefficient of the frame volume element; degree must be 4.
  Complex volume_coefficient() const;

  FormAtPoint real_part() const;
  FormAtPoint imag_part() const;
  FormAtPoint conjugate() const;
  double max_abs() const;

  FormAtPoint& operator+=(const FormAtPoint& o);
  FormAtPoint& operator-=(const FormAtPoint& o);
  FormAtPoint& operator*=(Complex z);

  friend FormAtPoint operator+(FormAtPoint a, const FormAtPoint& b) { return a += b; }
  friend FormAtPoint operator-(FormAtPoint a, const FormAtPoint& b) { return a -= b; }
  friend FormAtPoint operator*(FormAtPoint a, Complex z) { return a *= z; }
  friend FormAtPoint operator*(Complex z, FormAtPoint a) { return a *= z; }

 private:
  int degree_;
  Frame frame_;
  std::vector<Complex> coeffs_;
};

/// Graded-antisymmetric product. Throws on frame mismatch or degree overflow.
FormAtPoint wedge(const FormAtPoint& a, const FormAtPoint& b);

/// Pull a k-form back through the linear map with Jacobian J
/// (J maps new-frame tangent vectors to old-frame tangent vectors).
FormAtPoint pullback(const FormAtPoint& form, const Eigen::Matrix4d& jacobian, Frame new_frame);

/// Central-difference exterior derivative of a form field, O(h^2); the
/// Richardson option combines steps h and h/2 for O(h^4).
FormAtPoint exterior_derivative_fd(
    const std::function<FormAtPoint(const std::array<double, 4>&)>& field,
    const std::array<double, 4>& at, double h = 1e-4, bool richardson = false);

/// A real symmetric metric tensor at a point.
struct MetricAtPoint {
  Frame frame;
  Eigen::Matrix4d g;
};

struct SylvesterResult {
  std::array<double, 4> minors;
  bool positive;
};

/// Leading principal minors and the Sylvester positivity verdict.
SylvesterResult sylvester_positive(const MetricAtPoint& m);

struct HyperkahlerExtraction {
  MetricAtPoint metric;
  std::array<Eigen::Matrix4d, 3> complex_structures;  // cyclic pairings
  double j_squared_residual;
  double condition_number;  // of the w1 coefficient matrix
};

/// Metric from a candidate hyperkahler triple (w1, w2, w3) of real
/// 2-forms: J = W1^{-1} W2 must square to -Id (tolerance j_tol), and
/// g = sym(J^T W3). Sign conventions are calibrated so the S = 0
/// semi-flat triple yields a positive definite g.
HyperkahlerExtraction triple_to_metric(const FormAtPoint& w1, const FormAtPoint& w2,
                                       const FormAtPoint& w3, double j_tol = 1e-6);

}  // namespace ffhk
