#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// Argument outside the domain where an operation is defined (e.g. |z| > 1).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A documented precondition failed (bad bracket, normalization violated, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A radius computation produced sigma <= 0, so no schlicht disk is asserted.
class DegenerateResult : public std::runtime_error {
 public:
  explicit DegenerateResult(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace landau
