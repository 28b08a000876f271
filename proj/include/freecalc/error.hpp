#pragma once

#include <stdexcept>
#include <string>

namespace freecalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An enumeration or search would exceed its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace freecalc
