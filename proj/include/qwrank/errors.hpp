#pragma once

#include <stdexcept>
#include <string>

namespace qwrank {

/// Input or file-format error. `line` is 1-based; 0 means the whole file/stream.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Numerical failure (non-convergence, invariant violation beyond tolerance).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwrank
