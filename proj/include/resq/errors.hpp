#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resq {

/// Caller supplied something outside an operation's domain (composite modulus,
/// zero polynomial where a nonzero one is required, violated precondition).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or scan cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven identity or bound failed. Always an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    /// Zero-based character offset into the input text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace resq
