#pragma once

#include <stdexcept>
#include <string>

namespace soficheck {

/// Malformed input text (graph files, CLI-provided words).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Structurally well-formed input that violates a domain precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation would exceed its configured budget. Budgets fail loudly;
/// no operation silently truncates.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An S-gap query whose answer depends on gap values beyond the search cutoff.
class CutoffError : public BudgetError {
public:
    explicit CutoffError(const std::string& msg) : BudgetError(msg) {}
};

} // namespace soficheck
