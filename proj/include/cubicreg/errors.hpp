#pragma once

#include <stdexcept>
#include <string>

namespace cubicreg {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite entries or a dimension outside the supported range.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// shifted_solve hit a numerically singular shift outside pseudo-solve mode.
class SingularShift : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix dimensions disagree.
class DimMismatch : public Error {
 public:
  using Error::Error;
};

/// The cubic subproblem solver exhausted its safeguards.
class SubproblemFailure : public Error {
 public:
  using Error::Error;
};

/// A point left the box on which the problem's Lipschitz constant is valid.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Unknown built-in problem name, or an unsupported name/dim combination.
class UnknownProblem : public Error {
 public:
  using Error::Error;
};

/// The oracle policy cannot run on the given problem.
class PolicyUnsupported : public Error {
 public:
  using Error::Error;
};

/// The decrease coefficient gamma is non-positive: the regularization weight
/// sits at or below the certifiability threshold, so no rate certificate can
/// be produced.
class GammaNonPositive : public Error {
 public:
  using Error::Error;
};

/// Rate certification needs at least two completed steps.
class TooFewIterations : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubicreg
