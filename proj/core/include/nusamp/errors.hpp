#pragma once

#include <stdexcept>
#include <string>

namespace nusamp {

// A parameter lies outside the mathematical domain of an operation
// (for example sigma >= pi, or a perturbation bound L >= 1/2).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Inconsistent or malformed experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to meet its contract (bracket lost,
// quadrature budget exhausted, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Too few usable points, or degenerate abscissas, for a least-squares fit.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nusamp
