#pragma once

#include <stdexcept>

namespace greenring {

// Precondition violations are reported as std::invalid_argument. The two
// types below mark failures that are not the caller's fault.

/// A recursion produced a value that cannot be a module decomposition
/// (negative or non-integral projective correction, negative multiplicity).
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A matrix handed to the oracle is not a representation of C_{2^n}.
class NotARepresentation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace greenring
