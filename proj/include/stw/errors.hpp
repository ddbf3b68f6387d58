#pragma once

#include <stdexcept>
#include <string>

namespace stw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input to an algebraic operation (wrong algebra, wrong ambient, bad degree).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Raised by the expression parser; `position` is a 0-based offset into the input.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position(position)
    {
    }
    std::size_t position;
};

struct SeriesError : Error {
    enum class Code { NegativeCoefficient, InexactDivision };
    SeriesError(Code code, const std::string& msg) : Error(msg), code(code) {}
    Code code;
};

}  // namespace stw
