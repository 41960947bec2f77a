// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace edm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- parameter validation ----
struct ValidationError : Error {
    using Error::Error;
};
struct NonPositiveFrequency : ValidationError {
    using ValidationError::ValidationError;
};
struct NegativeCoupling : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidSpin : ValidationError {
    using ValidationError::ValidationError;
};
// k1 >= omega_f, or k1^2 + k2^2 > omega_f^2: the critical coupling is not
// defined and the field sector is unbounded below.
struct OutsideValidityRegion : ValidationError {
    using ValidationError::ValidationError;
};

// gamma_c = 0 (pump circle k1^2 + k2^2 = omega_f^2): Gamma = gamma/gamma_c is
// undefined; callers must branch to the "always superradiant" treatment.
struct DegenerateBoundary : Error {
    using Error::Error;
};

// ---- semiclassics ----
struct DegenerateChart : Error {
    using Error::Error;
};
struct EnergyDriftExceeded : Error {
    using Error::Error;
};
struct StepSizeUnderflow : Error {
    using Error::Error;
};

// ---- quantum ----
struct CutoffTooSmall : Error {
    using Error::Error;
};
struct SolverNoConvergence : Error {
    using Error::Error;
};
struct DimensionBudgetExceeded : Error {
    using Error::Error;
};
struct GapClosed : Error {
    using Error::Error;
};

// ---- harness ----
struct ConfigError : Error {
    enum class Kind { Syntax, UnknownKey, Range };
    ConfigError(Kind kind, int line, const std::string& what)
        : Error("config line " + std::to_string(line) + ": " + what),
          kind(kind),
          line(line) {}
    Kind kind;
    int line;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace edm
