#pragma once

#include <stdexcept>
#include <string>

namespace ptkdv {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

struct NonPositiveArgument : DomainError {
  using DomainError::DomainError;
};

struct ModulusOutOfRange : DomainError {
  using DomainError::DomainError;
};

// An iteration failed to reach its tolerance within the budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

struct MaxIterations : ConvergenceFailure {
  using ConvergenceFailure::ConvergenceFailure;
};

struct TargetOutOfBracket : DomainError {
  using DomainError::DomainError;
};

// (l, p, m, alpha, c) outside the regime a construction is valid in.
struct InadmissibleParams : DomainError {
  using DomainError::DomainError;
};

// m must be a positive even integer for the reality convention to exist.
struct OddM : InadmissibleParams {
  using InadmissibleParams::InadmissibleParams;
};

// Profile family does not apply to the given parameters.
struct FamilyMismatch : InadmissibleParams {
  using InadmissibleParams::InadmissibleParams;
};

struct UnsupportedFamily : DomainError {
  using DomainError::DomainError;
};

struct BeyondSupport : DomainError {
  using DomainError::DomainError;
};

// A Gamma-function argument landed on a pole (0, -1, -2, ...).
struct GammaPole : DomainError {
  using DomainError::DomainError;
};

// A linearization coefficient is non-finite at an interior grid point.
struct SingularCoefficient : Error {
  using Error::Error;
};

// A trial-function moment integral does not converge for the given shape.
struct DivergentMoment : DomainError {
  using DomainError::DomainError;
};

// The reduced Hamiltonian has no interior minimum in beta (l >= p+3m).
struct NoInteriorMinimum : DomainError {
  using DomainError::DomainError;
};

// Bad run configuration (CLI / JSON config layer).
struct InvalidConfig : Error {
  using Error::Error;
};

}  // namespace ptkdv
