#pragma once

#include <stdexcept>
#include <string>

namespace preschwarz {

/// Argument outside the domain of a mathematical primitive (log of zero,
/// a point outside the open unit disc, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid (alpha, beta) pair or grid configuration.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures while evaluating an analytic model.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested point lies beyond the radius where the truncated series is trusted.
class TruncationError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

/// f'(z) vanishes (numerically) so f''/f' is undefined.
class CriticalPointError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

/// f(z) vanishes at a nonzero point where z/f is required.
class SingularityError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

/// A constructed model failed its own validity check (e.g. z/f has zeros).
class ConstructionError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

/// Precondition of a report (e.g. class membership) not satisfied.
class PreconditionError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

/// Function name or coefficient file could not be resolved.
class UnknownFunctionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace preschwarz
