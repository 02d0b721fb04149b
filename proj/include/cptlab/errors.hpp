// errors.hpp — Exception types carrying numerical diagnostics

#pragma once

#include <stdexcept>
#include <string>

#include "cptlab/types.hpp"

namespace cptlab {

// Adaptive integration could not proceed (step-size underflow or invalid state).
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double failure_time)
        : std::runtime_error(what), failure_time_(failure_time) {}
    double failure_time() const noexcept { return failure_time_; }

private:
    double failure_time_;
};

// Propagation-based steady-state search ran out of time budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, DensityMatrix last_state, double residual)
        : std::runtime_error(what), last_state_(std::move(last_state)), residual_(residual) {}
    const DensityMatrix& last_state() const noexcept { return last_state_; }
    double residual() const noexcept { return residual_; }

private:
    DensityMatrix last_state_;
    double residual_;
};

// Generator null space has dimension >= 2; no unique steady state exists.
class NonUniqueSteadyStateError : public std::runtime_error {
public:
    NonUniqueSteadyStateError(const std::string& what, double smallest_sv,
                              double second_smallest_sv, double norm)
        : std::runtime_error(what),
          smallest_sv_(smallest_sv),
          second_smallest_sv_(second_smallest_sv),
          norm_(norm) {}
    double smallest_sv() const noexcept { return smallest_sv_; }
    double second_smallest_sv() const noexcept { return second_smallest_sv_; }
    double norm() const noexcept { return norm_; }

private:
    double smallest_sv_;
    double second_smallest_sv_;
    double norm_;
};

// A computed result violated a structural guarantee (e.g. a dip curve that is
// supposed to be strictly monotone came out otherwise). Indicates solver failure.
class InternalConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Base class for estimation-domain failures (exit code 3 at the CLI).
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Measurement does not lie between the dip heights at the bracket endpoints.
class OutOfBracketError : public EstimationError {
public:
    OutOfBracketError(const std::string& what, double height_lo, double height_hi,
                      double measured)
        : EstimationError(what), height_lo_(height_lo), height_hi_(height_hi),
          measured_(measured) {}
    double height_at_lo() const noexcept { return height_lo_; }
    double height_at_hi() const noexcept { return height_hi_; }
    double measured() const noexcept { return measured_; }

private:
    double height_lo_;
    double height_hi_;
    double measured_;
};

// Measured dip height <= 0: consistent with a noiseless bath, tau2 unbounded.
class NoiselessMeasurementError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

// Fidelity plateau saturates below the requested quality floor.
class SaturationBelowThresholdError : public EstimationError {
public:
    SaturationBelowThresholdError(const std::string& what, double plateau)
        : EstimationError(what), plateau_(plateau) {}
    double plateau() const noexcept { return plateau_; }

private:
    double plateau_;
};

} // namespace cptlab
