#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

// Bad caller input: out-of-range indices, malformed parameters, unreadable files.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exactness or sign invariant broke. Never caused by valid input; always a defect.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace orbitkit
