#pragma once

#include <stdexcept>
#include <string>

namespace dgforge {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not conform (vector/matrix dimension mismatch).
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Evaluation failed: unbound symbol or elementary-function domain violation.
class EvalError : public Error {
public:
    explicit EvalError(const std::string& what) : Error(what) {}
};

/// A form violates its structural contract (measure/restriction/linearity).
class FormError : public Error {
public:
    explicit FormError(const std::string& what) : Error(what) {}
};

/// Mesh or space construction failure.
class MeshError : public Error {
public:
    explicit MeshError(const std::string& what) : Error(what) {}
};

/// Linear or nonlinear solver failure that cannot be reported as data.
class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(what) {}
};

} // namespace dgforge
