#pragma once

#include <stdexcept>
#include <string>

namespace cbf {

/// Precondition or parameter-range violation.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed word or code text.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An exhaustive scan would exceed the configured q^n guard.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No closed form covers the requested parameters; the caller has to enumerate.
class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cbf
