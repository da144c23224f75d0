#pragma once

#include <stdexcept>
#include <string>

namespace kronx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
// SqrtRational sum whose radicands do not combine
struct ClosureError : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };

struct ConvergenceError : Error {
    double residual;
    ConvergenceError(const std::string& what, double res) : Error(what), residual(res) {}
};

}  // namespace kronx
