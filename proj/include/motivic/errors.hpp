#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace motivic {

// Exact division failed with a nonzero remainder.
struct NotDivisibleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Division requested by an element that is not a unit of the localised ring.
struct NotInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Specialisation L -> q hit a zero of a denominator factor.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Enumeration would exceed the oracle's stated operation budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classifying-class formula requested for a non-special group.
struct NotSpecialError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested value is outside the implemented catalog range.
struct UnsupportedError : std::domain_error {
    using std::domain_error::domain_error;
};

// A truncated series has no nonzero represented coefficient left.
struct PrecisionExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mass that must be strictly positive came out <= 0.
struct NonPositiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A declared symbol is missing the data needed for the requested operation.
struct UnknownCountError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    size_t offset;
    std::vector<std::string> expected;
    ParseError(size_t off, std::vector<std::string> exp, const std::string& what)
        : std::runtime_error(what), offset(off), expected(std::move(exp)) {}
};

} // namespace motivic

#endif
