#pragma once

#include <stdexcept>
#include <string>

namespace bgumbel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested integral or series does not converge (e.g. Gamma(0, 0)).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double error_estimate)
        : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

/// A moment order beyond what the closed forms support.
class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

/// The weighted Gumbel law is undefined because E(Y^k) vanishes.
class DegenerateWeightError : public Error {
public:
    using Error::Error;
};

/// The mixture representation is used outside its sign regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Two roots of the critical-point function could not be separated.
class RootIsolationError : public Error {
public:
    using Error::Error;
};

/// A precondition on the parameter triple does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Empty, too short or degenerate input data.
class DataError : public Error {
public:
    using Error::Error;
};

/// The information matrix at the optimum is not invertible.
class SingularInformationError : public Error {
public:
    using Error::Error;
};

}  // namespace bgumbel
