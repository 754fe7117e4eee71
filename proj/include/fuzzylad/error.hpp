#pragma once

#include <stdexcept>
#include <string>

namespace fuzzylad {

/// Input that violates a structural requirement (shape, reciprocity, range).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The constructed relation would leave the unit interval or break its shape.
class OutOfUnitInterval : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A consistent relation was required but the input is not consistent.
class NotConsistent : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The linear program behind a derivation has no feasible point.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The simplex ran out of iterations or reported an unexpected status.
class SolverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fuzzylad
