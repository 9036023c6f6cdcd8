#pragma once

#include <stdexcept>
#include <string>

namespace ihara {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input does not describe a graph the analyses accept. The CLI maps every
// InputError to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class NotRegular : public InputError {
public:
    using InputError::InputError;
};

class NotConnected : public InputError {
public:
    using InputError::InputError;
};

class NonSymmetric : public Error {
public:
    using Error::Error;
};

class SweepCapExceeded : public Error {
public:
    SweepCapExceeded(int sweeps, double residual)
        : Error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                " sweeps (off-diagonal mass " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

class TrivialEigenvalueMissing : public Error {
public:
    using Error::Error;
};

class RoundingResidualTooLarge : public Error {
public:
    using Error::Error;
};

class CostCapExceeded : public Error {
public:
    using Error::Error;
};

class ZeroAtOrigin : public Error {
public:
    using Error::Error;
};

class PoleHit : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class SignMismatch : public Error {
public:
    using Error::Error;
};

} // namespace ihara
