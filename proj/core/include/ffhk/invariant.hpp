#pragma once

#include <complex>
#include <vector>

namespace ffhk {

using Complex = std::complex<double>;

/// Branch of arg c / ln c on the base disc.
enum class Chart {
  Principal,  ///< arg c in (-pi, pi]
  Positive,   ///< arg c in (0, 2pi]
};

/// Point c = c1 + i c2 on the base disc, carrying its branch tag.
struct BasePoint {
  double c1 = 0.0;
  double c2 = 0.0;
  Chart chart = Chart::Principal;

  Complex c() const { return {c1, c2}; }
  double abs() const { return std::hypot(c1, c2); }
  /// arg c in the half-open interval declared by the chart.
  double arg() const;
  /// ln c on the declared branch.
  Complex log() const { return {std::log(abs()), arg()}; }
};

/// Global scale parameter R > 0 and base disc radius epsilon.
struct ModelParams {
  double R = 1.0;
  double epsilon = 0.5;
};

/// All first and second derivative data of S at a point.
struct InvariantValues {
  double S;        ///< Re f(c)
  double S1;       ///< dS/dc1
  double S2;       ///< dS/dc2
  double S_tilde;  ///< Im f(c), conjugate harmonic of S
  double S11;      ///< d^2 S / dc1^2
  double S12;      ///< d^2 S / dc1 dc2
};

/// The semi-global invariant S = Re f(c) of a focus-focus fibration,
/// represented by the finite holomorphic series f(c) = sum a_k c^k,
/// a_0 = 0. Harmonicity and S(0) = 0 hold by construction.
class HarmonicInvariant {
 public:
  /// S == 0 on the default disc of radius 0.5.
  HarmonicInvariant() = default;

  /// coefficients a_1 .. a_K of f(c) = sum_k a_k c^k.
  explicit HarmonicInvariant(std::vector<Complex> coefficients, double radius = 0.5);

  /// S, S_tilde, S1, S2, S11, S12 at p. Throws DomainError for |c| >= radius.
  InvariantValues eval(const BasePoint& p) const;

  Complex f(Complex c) const;
  Complex f_prime(Complex c) const;
  Complex f_second(Complex c) const;

  double radius() const { return radius_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;  // a_1 .. a_K
  double radius_ = 0.5;
};

/// lambda = S1 - ln|c|, the period-lattice stretch; must be positive for
/// the angle coordinates (and every metric) to exist.
double lattice_stretch(const HarmonicInvariant& s, const BasePoint& p);

/// mu = S2 + arg c, the lattice shear on the declared branch.
double lattice_shear(const HarmonicInvariant& s, const BasePoint& p);

}  // namespace ffhk
