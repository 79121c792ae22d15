#pragma once

#include <stdexcept>

namespace qlink {

struct UnknownWavelengthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnachievableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateRateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InfeasibleRateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qlink
