#pragma once

#include <stdexcept>
#include <string>

namespace rscyl {

// Bad arguments or inconsistent operands (dimension, field, degree mismatch).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (e.g. non-harmonic).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation on or too close to a kernel singularity.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A region or configuration violates a theorem hypothesis.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Truncation policy cannot deliver a valid bound.
class PolicyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant (singular solve that must not occur, etc.).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rscyl
