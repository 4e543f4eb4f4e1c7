#pragma once

#include "dgforge/femcore/mesh.hpp"

#include <array>

namespace dgforge::femcore {

/// Affine map x = A xhat + b from the reference triangle (0,0)-(1,0)-(0,1)
/// to a physical cell, with the pieces assembly needs: inverse map, gradient
/// transform A^{-T}, Jacobian determinant (= 2 area for CCW cells).
struct CellGeometry {
    std::array<double, 4> a;     // row-major A
    std::array<double, 4> a_inv; // row-major A^{-1}
    std::array<double, 2> shift; // b
    double det;

    std::array<double, 2> to_physical(const std::array<double, 2>& ref) const
    {
        return {a[0] * ref[0] + a[1] * ref[1] + shift[0],
                a[2] * ref[0] + a[3] * ref[1] + shift[1]};
    }

    std::array<double, 2> to_reference(const std::array<double, 2>& x) const
    {
        const double dx = x[0] - shift[0], dy = x[1] - shift[1];
        return {a_inv[0] * dx + a_inv[1] * dy, a_inv[2] * dx + a_inv[3] * dy};
    }

    /// grad_x phi = A^{-T} grad_ref phi.
    std::array<double, 2> physical_gradient(double gx_ref, double gy_ref) const
    {
        return {a_inv[0] * gx_ref + a_inv[2] * gy_ref, a_inv[1] * gx_ref + a_inv[3] * gy_ref};
    }
};

CellGeometry cell_geometry(const Mesh2D& mesh, int cell);

/// Outward unit normal of a cell on one of its local edges.
std::array<double, 2> outward_normal(const Mesh2D& mesh, int cell, int local_edge);

} // namespace dgforge::femcore
