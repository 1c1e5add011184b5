#pragma once

#include <stdexcept>
#include <string>

namespace mpk {

// Base for every domain error raised by the library. Usage problems in the
// command-line front end are reported separately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Natural subtraction with a larger subtrahend.
class Underflow : public Error {
public:
    Underflow() : Error("natural subtraction underflow") {}
};

}  // namespace mpk
