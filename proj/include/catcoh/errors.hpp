#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catcoh {

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Positioned diagnostic raised by the file parsers.
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// Total simplex count exceeded the configured cap (CLI exit code 3).
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure of an assembled complex or map, e.g. d*d != 0.
class ComplexError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// List of violated axioms; empty means valid.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
    void merge(const ValidationReport& other, const std::string& prefix = {});
    std::string summary(std::size_t max_lines = 20) const;
};

/// Simplex cap shared by all enumerations of one simplicial object.
struct SimplexCap {
    std::size_t limit = 1000000;

    /// Default cap, overridable through the CATCOH_SIMPLEX_CAP environment variable.
    static SimplexCap from_environment();
};

}  // namespace catcoh
