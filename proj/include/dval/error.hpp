#pragma once

#include <stdexcept>
#include <string>

namespace dval {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: grammar, schema, undeclared symbols.
class InputError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain (division by zero, j below the
// rule's start index, a step that would leave the power series ring).
class DomainError : public Error {
public:
    using Error::Error;
};

// An order search ran into the precision cap.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, int cap) : Error(what), cap_(cap) {}
    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

// An iterative procedure hit its iteration cap.
class IterationError : public Error {
public:
    IterationError(const std::string& what, long stable_value, int iterations)
        : Error(what), stable_value_(stable_value), iterations_(iterations) {}
    long stable_value() const noexcept { return stable_value_; }
    int iterations() const noexcept { return iterations_; }

private:
    long stable_value_;
    int iterations_;
};

} // namespace dval
