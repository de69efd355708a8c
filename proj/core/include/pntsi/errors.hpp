#pragma once

#include <stdexcept>
#include <string>

namespace pntsi {

/// A stated precondition (window constraint, parameter range) was violated.
/// `constraint()` names the violated condition, e.g. "h <= x^(3/4)".
class window_error : public std::domain_error {
public:
    explicit window_error(std::string constraint)
        : std::domain_error("window constraint violated: " + constraint),
          constraint_(std::move(constraint)) {}
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// Malformed input data (zero-table text or cache).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)), line_(line) {}
    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// Adaptive quadrature hit max_depth without reaching the tolerance.
class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pntsi
