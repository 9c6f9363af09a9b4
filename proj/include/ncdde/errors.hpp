// Error taxonomy shared by all modules. Each class maps to one failure
// category so callers (and the CLI exit-code contract) can distinguish
// configuration problems from violated model assumptions and runtime faults.

#pragma once

#include <stdexcept>
#include <string>

namespace ncdde {

// Bad or inconsistent configuration values (domain sizes, step counts, ...).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched array/field sizes between objects that must be aligned.
class ShapeError : public std::runtime_error {
  public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural model assumption failed validation. Carries the clause name.
class AssumptionError : public std::runtime_error {
  public:
    AssumptionError(std::string clause, const std::string& msg)
        : std::runtime_error(clause + ": " + msg), clause_(std::move(clause)) {}
    const std::string& clause() const { return clause_; }

  private:
    std::string clause_;
};

// History interpolation requested outside the covered time range.
class CoverageError : public std::runtime_error {
  public:
    explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-monotone knot insertion into a history buffer.
class OrderingError : public std::runtime_error {
  public:
    explicit OrderingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Nonpositive mass-diagonal entry encountered while stepping.
class StiffnessError : public std::runtime_error {
  public:
    explicit StiffnessError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values produced by a pointwise map or quadrature.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ncdde
