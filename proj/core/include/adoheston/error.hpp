#pragma once

#include <stdexcept>
#include <string>

namespace adoheston {

// Argument outside the domain of an operation. Maps to CLI exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data that cannot be fitted (too few points, nonpositive values,
// no spread in the regressor). Maps to CLI exit code 2.
class DataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quadrature or ODE failure, overflow, non-finite state. Maps to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double estimated_error = 0.0)
        : std::runtime_error(what), estimated_error_(estimated_error) {}

    double estimated_error() const noexcept { return estimated_error_; }

private:
    double estimated_error_;
};

} // namespace adoheston
