#pragma once

#include <stdexcept>
#include <string>

namespace nclab {

// Invalid parameter values or malformed arguments (usage-level problems).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An object passed in does not belong to the domain an operation expects.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A job would exceed the configured object cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula is not defined for the requested parameters.
class UnsupportedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant was violated (non-integral count, negative coefficient, ...).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace nclab
