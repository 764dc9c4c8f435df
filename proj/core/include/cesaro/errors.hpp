#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

/// Malformed input: an invalid measure, coefficient file or config value.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a function (|z| >= 1, t outside [0,1), s <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameter combination outside the hypotheses a criterion is stated for.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its tolerance. Carries the last
/// estimates it produced so callers can report them.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::vector<double> estimates = {})
        : std::runtime_error(what), estimates_(std::move(estimates)) {}

    const std::vector<double>& estimates() const noexcept { return estimates_; }

private:
    std::vector<double> estimates_;
};

}  // namespace cesaro
