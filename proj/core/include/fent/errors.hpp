#ifndef FENT_ERRORS_HPP
#define FENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fent {

// Scenario file could not be parsed (syntax or field level).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario parsed but violates a structural invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A group element is not a word in the declared generators.
struct UnreachableElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Target entropy below the undeformed value; deformation only raises entropy.
struct UnreachableTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The cocycle puts no kappa-mass through the chosen coordinate.
struct NoMassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No admissible slow-growth sequence fits the budget.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fent

#endif
