#pragma once

#include <stdexcept>
#include <string>

namespace semifield {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sampler handed an element owned by a different instance.
struct InputMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires a capability (ratio oracle, subtraction witness, ...)
// the instance does not provide.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires a characteristic the instance does not have.
struct UnsupportedCharacteristicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown instance name or invalid parameter.
struct DescriptorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A probe observed behavior no semifield can exhibit (e.g. the sequence
// 1, 1+1, 1+1+1, ... repeats without being idempotent or hitting zero).
struct InconsistentInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace semifield
