#pragma once

#include "dgforge/symexpr/expr.hpp"

#include <initializer_list>
#include <vector>

namespace dgforge::symexpr {

/// Column vector of scalar expressions. Arithmetic is dimension-checked.
class Vector {
public:
    Vector() = default;
    explicit Vector(int size) : e_(static_cast<std::size_t>(size), constant(0.0)) {}
    Vector(std::initializer_list<Expr> entries) : e_(entries) {}
    explicit Vector(std::vector<Expr> entries) : e_(std::move(entries)) {}

    int size() const { return static_cast<int>(e_.size()); }
    Expr& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const Expr& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<Expr>& entries() const { return e_; }

    /// Full field vector of symbols u_0..u_{m-1}.
    static Vector field(const std::string& family, int m, TraceSide side = TraceSide::None);
    /// Coordinate vector (x_0, ..., x_{d-1}).
    static Vector coordinates(int d);
    /// Facet normal (n_0, ..., n_{d-1}).
    static Vector normal(int d);

private:
    std::vector<Expr> e_;
};

/// Dense matrix of scalar expressions, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows * cols), constant(0.0)) {}

    static Matrix identity(int n);
    /// Gradient symbol matrix (du_j/dx_l), shape m x d.
    static Matrix field_gradient(const std::string& family, int m, int d,
                                 TraceSide side = TraceSide::None);
    static Matrix from_rows(std::initializer_list<std::initializer_list<Expr>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Expr& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Expr& operator()(int i, int j) const
    {
        return e_[static_cast<std::size_t>(i * cols_ + j)];
    }

    Matrix transposed() const;
    Vector row(int i) const;
    Vector col(int j) const;
    Expr trace() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Expr> e_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Expr& s, const Vector& v);
Vector operator*(double s, const Vector& v);
Vector operator*(const Vector& v, const Expr& s);
Vector operator*(const Vector& v, double s);
Vector operator-(const Vector& v);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Expr& s, const Matrix& m);
Matrix operator*(double s, const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Expr dot(const Vector& a, const Vector& b);
Matrix outer(const Vector& a, const Vector& b);
/// Frobenius double contraction sum_ij A_ij B_ij.
Expr inner(const Matrix& a, const Matrix& b);

/// Entry (i, j) = diff(f[i], u[j]); u entries must be terminal symbols.
Matrix jacobian(const Vector& f, const Vector& u);

Vector restrict_trace(const Vector& v, TraceSide side);
Matrix restrict_trace(const Matrix& m, TraceSide side);

/// Coefficients c_0..c_n of det(lambda I - M), c_0 = 1, computed with the
/// division-free Berkowitz recurrence. M must be square of size <= 4.
std::vector<Expr> berkowitz_charpoly(const Matrix& m);

} // namespace dgforge::symexpr
