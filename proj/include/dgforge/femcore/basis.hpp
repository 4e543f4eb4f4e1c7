#pragma once

#include "dgforge/common.hpp"

#include <array>
#include <span>
#include <vector>

namespace dgforge::femcore {

/// Scalar polynomial basis of total degree <= l on the reference triangle,
/// orthonormalised against the reference mass matrix (monomials put through
/// Gram-Schmidt via a Cholesky factor of the exact Gram matrix).
class ReferenceBasis {
public:
    explicit ReferenceBasis(int degree);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exponents_.size()); }

    void eval(double x, double y, std::span<double> values) const;
    void eval_grad(double x, double y, std::span<double> ddx, std::span<double> ddy) const;

    /// Interpolation nodes: the uniform lattice (i/l, j/l), i + j <= l; the
    /// centroid for l = 0.
    const std::vector<std::array<double, 2>>& interpolation_nodes() const { return nodes_; }

private:
    void monomials(double x, double y, std::span<double> m) const;

    int degree_;
    std::vector<std::array<int, 2>> exponents_;
    std::vector<double> coeffs_; // row-major: basis i = sum_j coeffs_(i,j) monomial_j
    std::vector<std::array<double, 2>> nodes_;
};

} // namespace dgforge::femcore
