// errors.hpp — exception types shared by the simulator modules

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcq {

/// Precondition or invariant violation on caller-supplied values.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure did not reach its target accuracy.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A fitted decay constant is unbounded (flat or growing data).
class NoDecayError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Markovian rate vanishes, so the decoherence time is infinite.
class InfiniteTimeError : public NumericalError {
public:
    explicit InfiniteTimeError(const std::string& what)
        : NumericalError(what, 0.0) {}
};

/// A scan over a fixed grid ended without meeting its criterion.
class SaturationError : public NumericalError {
public:
    SaturationError(const std::string& what, double grid_end)
        : NumericalError(what, grid_end) {}

    double grid_end() const noexcept { return residual(); }
};

/// Augmented tensor left its admissible range during propagation.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Requested problem size exceeds what the exact enumerator supports.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jcq
