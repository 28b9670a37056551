#include "ffhk/invariant.hpp"

#include <cmath>
#include <utility>

#include "ffhk/errors.hpp"

namespace ffhk {

double BasePoint::arg() const {
  double a = std::atan2(c2, c1);  // (-pi, pi]
  if (chart == Chart::Positive && a <= 0.0) a += 2.0 * M_PI;
  return a;
}

HarmonicInvariant::HarmonicInvariant(std::vector<Complex> coefficients, double radius)
    : coeffs_(std::move(coefficients)), radius_(radius) {
  if (radius_ <= 0.0) throw DomainError("HarmonicInvariant: radius must be positive");
  while (!coeffs_.empty() && coeffs_.back() == Complex{0.0, 0.0}) coeffs_.pop_back();
}

Complex HarmonicInvariant::f(Complex c) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + *it) * c;
  return acc;
}

Complex HarmonicInvariant::f_prime(Complex c) const {
  Complex acc{0.0, 0.0};
  for (std::size_t k = coeffs_.size(); k > 0; --k) {
    acc = acc * c + static_cast<double>(k) * coeffs_[k - 1];
  }
  return acc;
}

Complex HarmonicInvariant::f_second(Complex c) const {
  Complex acc{0.0, 0.0};
  for (std::size_t k = coeffs_.size(); k > 1; --k) {
    acc = acc * c + static_cast<double>(k) * static_cast<double>(k - 1) * coeffs_[k - 1];
  }
  return acc;
}

InvariantValues HarmonicInvariant::eval(const BasePoint& p) const {
  if (p.abs() >= radius_) {
    throw DomainError("HarmonicInvariant::eval: |c| outside validity disc");
  }
  const Complex c = p.c();
  const Complex w = f(c);
  const Complex w1 = f_prime(c);   // S1 - i S2
  const Complex w2 = f_second(c);  // S11 - i S12
  return {w.real(), w1.real(), -w1.imag(), w.imag(), w2.real(), -w2.imag()};
}

double lattice_stretch(const HarmonicInvariant& s, const BasePoint& p) {
  return s.eval(p).S1 - std::log(p.abs());
}

double lattice_shear(const HarmonicInvariant& s, const BasePoint& p) {
  return s.eval(p).S2 + p.arg();
}

}  // namespace ffhk
