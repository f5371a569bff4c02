#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Library errors derive from the matching std exception so callers (and the
// Python bindings) can catch either the specific or the generic type.

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The initial bracket of a root search does not straddle the target.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enclosures stayed too wide to certify a sign even after tightening.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bohr
