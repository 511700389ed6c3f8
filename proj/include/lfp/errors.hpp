#pragma once

#include <stdexcept>
#include <string>

namespace lfp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square matrix, wrong coordinate count, degenerate hull.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (zero divisor,
/// zero argument of g_d, malformed rational text).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Some projected vertex subset is affinely dependent.
class GeneralPositionError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a lattice-face input was given something else.
class NotLatticeFaceError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or grid scan would exceed the configured iteration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

/// Default cap on enumeration / grid-scan iterations.
inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

}  // namespace lfp
