#pragma once

#include <stdexcept>
#include <string>

namespace qab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Configuration rejected by validation or the config-file parser.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Division by zero in a ratio (e.g. reference voltage is zero).
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// The inductance matrix is numerically singular (condition number > 1e12).
class SingularInductanceMatrix : public Error {
public:
    using Error::Error;
};

/// I - Phi(T) is singular; the cycle map has no unique fixed point.
/// Occurs only when the network is lossless.
class NoUniqueSteadyState : public Error {
public:
    using Error::Error;
};

/// Sample window does not cover exactly one switching period.
class WrongWindowLength : public Error {
public:
    using Error::Error;
};

/// The Newton system is rank-deficient; the operating point is
/// infeasible or degenerate.
class JacobianSingular : public Error {
public:
    using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qab
