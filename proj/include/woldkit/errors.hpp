#pragma once

#include <stdexcept>
#include <string>

namespace woldkit {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operator was expected to leave a subspace invariant but does not.
class NotInvariant : public Error {
public:
  using Error::Error;
};

/// A compression of an operator to a subspace is numerically singular.
class SingularOnSubspace : public Error {
public:
  using Error::Error;
};

/// A rank decision falls inside the tolerance band and cannot be trusted.
class AmbiguousRank : public Error {
public:
  using Error::Error;
};

/// An enumeration or iteration exceeded its configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A point lies outside the domain on which an evaluation is defined.
class OutsideDomain : public Error {
public:
  using Error::Error;
};

/// Matrices that were required to commute do not, within tolerance.
class NotCommuting : public Error {
public:
  using Error::Error;
};

/// The positivity hypotheses on the defect operators fail.
class NotHypercontraction : public Error {
public:
  explicit NotHypercontraction(const std::string& what, double eigenvalue)
      : Error(what), offending_eigenvalue(eigenvalue) {}
  double offending_eigenvalue;
};

/// A scenario configuration failed to parse or validate.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace woldkit
