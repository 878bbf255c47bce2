#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockcert {

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live over different ground sets.
class GroundMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Ground set has fewer elements than the operation needs.
class GroundTooSmall : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Degree (or count total) is below the threshold the operation requires.
class DegreeBelowBound : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A computation would exceed a hard size cap.
class SizeLimitExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Certificate is structurally invalid (as opposed to failing its identity).
class MalformedCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or validation error in textual input; `position` is a 0-based offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace blockcert
