#pragma once

#include <stdexcept>
#include <string>

namespace nuspec {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad dimensions, asymmetric index sets, out-of-range
/// parameters, unparsable configs. The CLI maps these to exit code 2.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A trigonometric polynomial support is missing a lag required by an
/// operation.
class InvalidSupportError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// A structural invariant was violated (e.g. pack called with p0 != 1).
class InvariantViolationError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// Parameter outside the supported regime (nu < 2).
class UnsupportedParameterError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// A cascade filter model whose denominator vanishes on the grid.
class InvalidModelError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// A spectral density with a negative value below tolerance.
class InvalidSpectrumError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// Numerical failure during quadrature (non-finite integrand).
class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested outside the feasible domain (P or Q not positive
/// where strict positivity is required).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The Newton system could not be factorized even after diagonal jitter.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, double condition_estimate)
        : Error(what), condition_estimate(condition_estimate) {}

    double condition_estimate;
};

/// Backtracking line search shrank the step below the configured minimum.
class LineSearchError : public Error {
public:
    using Error::Error;
};

} // namespace nuspec
