#pragma once

#include <stdexcept>

namespace overq {

/* Inversion of a series whose constant term is not +1 or -1. */
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

/* Parameter outside an operation's stated precondition range. */
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/* An enumeration request exceeded its budget guard and was not overridden. */
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Mathematically undefined input (e.g. tau(0), negative rank). */
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace overq
