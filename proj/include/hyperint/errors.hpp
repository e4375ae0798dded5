/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every hyperint module.
 *
 * All argument/domain problems derive from DomainError so callers (in
 * particular the CLI) can map them to a single "invalid input" outcome,
 * while iteration failures are a separate NoConvergence branch.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace hyperint {

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A lower Pochhammer parameter is zero or a negative integer, so the
/// series has a pole and cannot be summed.
class PoleParameter : public DomainError {
 public:
  explicit PoleParameter(const std::string& what) : DomainError(what) {}
};

/// An IntegralSpec violates one of its invariants.
class InvalidSpec : public DomainError {
 public:
  explicit InvalidSpec(const std::string& what) : DomainError(what) {}
};

/// The requested raw moment does not exist for the given parameters.
class MomentDoesNotExist : public DomainError {
 public:
  explicit MomentDoesNotExist(const std::string& what) : DomainError(what) {}
};

/// An iterative procedure (root finding, series with hard caps, ...)
/// failed to reach its tolerance within the iteration budget.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperint
