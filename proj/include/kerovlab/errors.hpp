#pragma once

#include <stdexcept>
#include <string>

namespace kerovlab {

// Domain violations (bad arguments, failed preconditions) are reported with
// std::domain_error. The two types below carry the remaining failure modes.

/// An input exceeded one of the enumeration guards.
class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

/// Two independent computations disagreed, or a result broke an invariant
/// that must always hold (integrality, positivity).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kerovlab
