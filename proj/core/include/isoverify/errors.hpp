#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoverify {

/// Base class of every error the library throws deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by an exactly-zero value.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Arithmetic between quadratic surds over different radicands.
class MixedField : public Error {
public:
    using Error::Error;
};

/// A certified comparison hit its refinement cap before resolving.
class Undecided : public Error {
public:
    using Error::Error;
};

/// A computation was rejected because it would exceed a configured budget
/// (factoring effort, bignum size, gap-evaluation range).
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A continued-fraction operation asked for quotients past the end of a
/// finite (rational) expansion.
class FiniteExpansionExhausted : public Error {
public:
    using Error::Error;
};

/// An approximation function produced a value outside (0, 1].
class RangeViolation : public Error {
public:
    using Error::Error;
};

/// A function declared decreasing was observed to increase.
class MonotonicityViolation : public Error {
public:
    using Error::Error;
};

/// Two distinct Markoff triples shared a maximum. Never expected;
/// reported rather than hidden.
class UnicityViolation : public Error {
public:
    using Error::Error;
};

/// The gamma parameter of a spectrum window check lies outside
/// (mu_{nu+1}, mu_nu).
class GammaOutOfRange : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments violating its contract.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Text input failed to parse. Carries the input and the offending offset
/// so callers can render a caret diagnostic.
class ParseError : public Error {
public:
    ParseError(std::string message, std::string input, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)),
          message_(std::move(message)),
          input_(std::move(input)),
          offset_(offset) {}

    const std::string& message() const { return message_; }
    const std::string& input() const { return input_; }
    std::size_t offset() const { return offset_; }

    /// Three-line diagnostic with a caret under the offending position.
    std::string caret_diagnostic() const {
        std::string out = "error: " + message_ + "\n  " + input_ + "\n  ";
        out.append(offset_ < input_.size() ? offset_ : input_.size(), ' ');
        out += "^";
        return out;
    }

private:
    std::string message_;
    std::string input_;
    std::size_t offset_;
};

}  // namespace isoverify
