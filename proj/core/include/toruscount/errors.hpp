#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toruscount {

/// A malformed input: bad syntax, bad flag, inconsistent ranks.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in a polynomial or term-list expression; `position` is the
/// byte offset into the parsed text.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An enumeration exceeded a configured cap.  The message names the bound.
class CapError : public std::runtime_error {
public:
    CapError(const std::string& what, const std::string& bound_name)
        : std::runtime_error(what + " [bound: " + bound_name + "]"),
          bound_name_(bound_name) {}

    const std::string& bound_name() const { return bound_name_; }

private:
    std::string bound_name_;
};

/// A violated internal invariant (a theorem the implementation relies on).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace toruscount
