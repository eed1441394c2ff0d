#pragma once

#include <stdexcept>
#include <string>

namespace beamgeneric {

// Shape or layout mismatch between objects that must agree.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A named field is absent from a layout.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Evaluation outside the functional's domain (e.g. log of a nonpositive temperature).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters or configuration that violate stated constraints.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller-side precondition (dt <= 0, too few samples, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite values appeared during time integration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

}  // namespace beamgeneric
