#pragma once

#include <stdexcept>
#include <string>

namespace dq {

// Base error for all domain failures (bad terms, malformed patterns, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based line number, thrown in strict mode.
class ParseFailure : public Error {
public:
    ParseFailure(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

} // namespace dq
