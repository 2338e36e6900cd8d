#pragma once

#include <stdexcept>
#include <string>

namespace gz {

/// Bad call arguments (out-of-range indices, malformed shapes, missing files).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data violates a type invariant (hermiticity, skewness, interlacing, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values or a numerical routine failed to converge.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// An eigenvalue gap collapsed below the guard where a smooth quantity was required.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& what, double gap) : std::runtime_error(what), gap(gap) {}
    double gap;
};

} // namespace gz
