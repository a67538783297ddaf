#pragma once

#include <stdexcept>
#include <string>

namespace ptwell {

// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (pole, E <= 0, w = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A point that would require evaluating the potential on its branch cut.
class BranchCutError : public DomainError {
public:
    using DomainError::DomainError;
};

// Iterative procedure (root finder, quadrature, continued fraction) did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Adaptive ODE integration collapsed its step size.
class StepUnderflowError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

// Result not representable in double precision; a scaled variant exists.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Requested functionality that only exists for particular parameter values.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace ptwell
