#pragma once

#include <stdexcept>
#include <string>

namespace normalsurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad file, unknown name, invalid link).
/// The CLI maps this to exit status 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A file failed to parse. `position` is a byte offset into the input.
class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : InputError(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called on arguments that violate its precondition
/// (non-solution vector, inadmissible vector, length mismatch, ...).
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

/// An enumeration exceeded its candidate cap or wall-clock budget.
/// The CLI maps this to exit status 3.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A state that valid input cannot produce.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace normalsurf
