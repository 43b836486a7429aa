#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

// Argument outside the mathematical domain of an operation (negative Bessel
// argument, coincident Green's function points, non-unit direction, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The dense moment-method system could not be solved to tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Malformed or corrupted input file (SCAT1 container, IDX images, config).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scatter
