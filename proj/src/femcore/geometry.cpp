#include "dgforge/femcore/geometry.hpp"

#include <cmath>

namespace dgforge::femcore {

CellGeometry cell_geometry(const Mesh2D& mesh, int cell)
{
    const auto& t = mesh.cells[static_cast<std::size_t>(cell)];
    const auto& v0 = mesh.vertices[static_cast<std::size_t>(t[0])];
    const auto& v1 = mesh.vertices[static_cast<std::size_t>(t[1])];
    const auto& v2 = mesh.vertices[static_cast<std::size_t>(t[2])];

    CellGeometry g;
    g.a = {v1[0] - v0[0], v2[0] - v0[0], v1[1] - v0[1], v2[1] - v0[1]};
    g.shift = {v0[0], v0[1]};
    g.det = g.a[0] * g.a[3] - g.a[1] * g.a[2];
    if (g.det <= 0.0) throw MeshError("cell_geometry: zero-area or inverted cell");
    g.a_inv = {g.a[3] / g.det, -g.a[1] / g.det, -g.a[2] / g.det, g.a[0] / g.det};
    return g;
}

std::array<double, 2> outward_normal(const Mesh2D& mesh, int cell, int local_edge)
{
    const auto& t = mesh.cells[static_cast<std::size_t>(cell)];
    const auto& a = mesh.vertices[static_cast<std::size_t>(t[static_cast<std::size_t>(local_edge)])];
    const auto& b =
        mesh.vertices[static_cast<std::size_t>(t[static_cast<std::size_t>((local_edge + 1) % 3)])];
    // For a CCW cell the outward normal is the edge tangent rotated clockwise.
    const double tx = b[0] - a[0], ty = b[1] - a[1];
    const double len = std::hypot(tx, ty);
    return {ty / len, -tx / len};
}

} // namespace dgforge::femcore
