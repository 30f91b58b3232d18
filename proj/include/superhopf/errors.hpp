#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superhopf {

// Caller supplied something the algebra does not know about (unknown
// generator, malformed definition, bad bound).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Rewriting exhausted its step budget; the presentation is not terminating.
class NonTerminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PresentationMismatch : public std::logic_error {
public:
    PresentationMismatch() : std::logic_error("operands belong to different presentations") {}
};

// A structure failed its own axioms (invalid Lie superalgebra, rejected rule, ...).
class InvalidStructure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedFieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace superhopf
