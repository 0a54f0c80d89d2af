#pragma once

#include <stdexcept>
#include <string>

namespace qasym {

/// Operands of a binary operation have different dimensions or chain lengths.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

/// Densifying a tensor operator would exceed the configured size cap.
class DimensionCapExceeded : public std::length_error {
 public:
  explicit DimensionCapExceeded(const std::string& what)
      : std::length_error(what) {}
};

/// The operator is proportional to the identity, so its asymmetry degree is
/// 0/0 and undefined.
class ScalarOperatorError : public std::domain_error {
 public:
  explicit ScalarOperatorError(const std::string& what)
      : std::domain_error(what) {}
};

/// A caller-supplied transformation does not satisfy the stated
/// preconditions (unitarity, commutation with the generators, invertibility).
class PreconditionViolation : public std::invalid_argument {
 public:
  explicit PreconditionViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qasym
