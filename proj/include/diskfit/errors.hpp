#pragma once

#include <stdexcept>
#include <string>

namespace diskfit {

/// Violated precondition or incompatible argument combination.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (log of zero,
/// source on the unit circle, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Problem description (JSON config or assembled FitProblem) fails validation.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix numerically singular at working precision.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integrand fails the decay requirements of an improper quadrature.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at a point where the approximant is singular.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diskfit
