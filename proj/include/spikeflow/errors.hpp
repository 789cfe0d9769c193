#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spikeflow {

// Violated precondition or dimension mismatch on a public interface.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed or incomplete configuration / catalogue / manifest input.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be read, written, or parsed.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integration failed: step-size underflow or persistent Newton failure.
// Carries the time and state reached so callers can log a diagnostic.
struct StiffnessError : std::runtime_error {
    double t_reached;
    std::vector<double> last_state;
    StiffnessError(const std::string& msg, double t, std::vector<double> state)
        : std::runtime_error(msg), t_reached(t), last_state(std::move(state)) {}
};

} // namespace spikeflow
