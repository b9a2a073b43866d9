#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rotslab {

using cplx = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : Error {
    using Error::Error;
};

struct GeometryError : Error {
    using Error::Error;
};

struct ParamError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Initial data failed one of the admissibility checks; `check` names the
/// violated hypothesis (e.g. "density_bounds").
struct DataRejected : Error {
    std::string check;
    DataRejected(std::string check_, const std::string& what)
        : Error("initial data rejected [" + check_ + "]: " + what), check(std::move(check_)) {}
};

/// Requested time step exceeds the advective CFL limit; carries the
/// admissible step size.
struct CflError : Error {
    double admissible_dt;
    CflError(double requested, double admissible)
        : Error("time step " + std::to_string(requested) + " rejected, admissible dt = " +
                std::to_string(admissible)),
          admissible_dt(admissible) {}
};

/// Inner iteration of the implicit solve failed to converge.
struct StepError : Error {
    double residual;
    StepError(const std::string& what, double residual_) : Error(what), residual(residual_) {}
};

}  // namespace rotslab
