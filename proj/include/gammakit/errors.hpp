#pragma once

#include <stdexcept>
#include <string>

namespace gammakit {

// Two operands carry different (l1, l2) parameters.
struct AlgebraMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// beta = 0: the operator does not induce an algebra.
struct DegenerateOperator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Zero or zero divisor passed to inverse().
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// A polynomial required to solve the target PDE does not.
struct NotASolution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Fewer boundary samples than the over-determination policy allows.
struct UnderDetermined : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Every collocation column was dropped as rank-deficient.
struct DegenerateBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or JSON document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gammakit
