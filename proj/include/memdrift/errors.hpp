#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace memdrift {

/// A device or model parameter failed validation. Carries the offending
/// parameter name so front ends can report it field by field.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string parameter, const std::string& message)
        : std::invalid_argument(message), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// An argument lies outside the domain a formula is defined on
/// (boundary position outside [0, D], negative charge, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Failure while time stepping or analysing a trace.
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace memdrift
