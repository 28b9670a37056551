#pragma once

#include <stdexcept>
#include <string>

namespace ffhk {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation requested at the Ooguri-Vafa singular point (c, theta_e) = (0, 0).
class SingularityError : public DomainError {
 public:
  explicit SingularityError(const std::string& what) : DomainError(what) {}
};

/// A positivity condition required by the construction fails at the point.
class PositivityError : public std::runtime_error {
 public:
  explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature or series failed to converge to the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ffhk
