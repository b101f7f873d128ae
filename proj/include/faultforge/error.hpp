#pragma once

#include <stdexcept>
#include <string>

namespace faultforge {

// Base class for all tool-level errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with a source position (1-based line/column, 0-based byte offset).
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col, std::size_t offset)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col), offset(offset) {}
    int line;
    int col;
    std::size_t offset;
};

// Name resolution or type error found after parsing.
struct SemanticError : Error {
    using Error::Error;
};

// Violation of an operation precondition (bad plan, scheme/kind mismatch, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace faultforge
