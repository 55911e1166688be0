#pragma once

#include <stdexcept>
#include <string>

namespace cvtele {

/// Input outside the mathematical domain of an operation (λ ≥ 1, negative
/// gain, non-finite values, malformed sweep ranges, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure did not reach its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse_(coarse), fine_(fine) {}

  double coarse() const noexcept { return coarse_; }
  double fine() const noexcept { return fine_; }

 private:
  double coarse_;
  double fine_;
};

/// Fock truncation too small for the requested squeezing.
class CutoffError : public std::runtime_error {
 public:
  CutoffError(const std::string& what, double tail_bound)
      : std::runtime_error(what), tail_bound_(tail_bound) {}

  double tail_bound() const noexcept { return tail_bound_; }

 private:
  double tail_bound_;
};

/// Root search found no sign change on the bracket.
class NoCrossoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvtele
