#pragma once

#include <stdexcept>
#include <string>

namespace burg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Grid too small for the requested mode content (or quadrature too coarse).
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Input violates the zero-mean (mass conservation) requirement.
class MassConservationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Time step violates the CFL-type constraint.
class StepSizeError : public Error {
public:
    using Error::Error;
};

/// Solution left the trusted range (NaN/overflow); carries failure location.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, long step_index, double t)
        : Error(what), step_index(step_index), t(t) {}
    long step_index = -1;
    double t = 0.0;
};

/// Snapshot time outside the averaging window.
class WindowError : public Error {
public:
    using Error::Error;
};

/// Accumulators with mismatched request sets cannot be merged.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Queried statistic was not requested during accumulation.
class MissingStatisticError : public Error {
public:
    using Error::Error;
};

/// Not enough points (or invalid data) for a power-law fit.
class FitError : public Error {
public:
    using Error::Error;
};

/// Requested spectral layer exceeds the resolved modes.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Config file problem; carries source location when known.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", col " +
                               std::to_string(column) + ": " + what
                         : what),
          line(line), column(column) {}
    int line = 0;
    int column = 0;
};

} // namespace burg
