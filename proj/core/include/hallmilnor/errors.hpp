#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallmilnor {

// Invalid argument or precondition violation (bad alphabet, empty input,
// arity mismatch, nonzero constant term, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Word text that does not match the bracket grammar. Carries the byte
// offset of the first offending character (or the input length for
// unexpected end of input).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A monomial exceeds the length bound of the basis table it is rewritten
// against.
class LengthBoundError : public DomainError {
public:
    LengthBoundError(int length, int max_len)
        : DomainError("monomial of length " + std::to_string(length) +
                      " exceeds table bound max_len=" + std::to_string(max_len)),
          length_(length),
          max_len_(max_len) {}

    int length() const noexcept { return length_; }
    int max_len() const noexcept { return max_len_; }

private:
    int length_;
    int max_len_;
};

} // namespace hallmilnor
