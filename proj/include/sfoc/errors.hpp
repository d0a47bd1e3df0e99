#pragma once

#include <stdexcept>
#include <string>

namespace sfoc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grid does not enclose the trap with the required margin.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A field acquired NaN/Inf values; message carries the last valid time.
class NonFiniteFieldError : public Error {
public:
    explicit NonFiniteFieldError(const std::string& what, double last_valid_time)
        : Error(what), last_valid_time_(last_valid_time) {}
    double last_valid_time() const { return last_valid_time_; }

private:
    double last_valid_time_ = 0.0;
};

/// Imaginary-time relaxation did not reach the energy tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what, double last_delta)
        : Error(what), last_delta_(last_delta) {}
    double last_delta() const { return last_delta_; }

private:
    double last_delta_ = 0.0;
};

/// Trace analysis failures: too few samples, no stable window, degenerate fit.
class TraceError : public Error {
public:
    using Error::Error;
};

/// Closed-form layer domain violations (subcritical width, insufficient energy, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Config parse/validation failures and table schema mismatches.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Circuit calibration cannot be completed from the given traces.
class CalibrationError : public Error {
public:
    using Error::Error;
};

}  // namespace sfoc
