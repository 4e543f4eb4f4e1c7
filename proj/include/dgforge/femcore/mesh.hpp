#pragma once

#include "dgforge/common.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dgforge::femcore {

/// Conforming 2D triangle mesh. Cells are counter-clockwise vertex triples.
/// Every facet knows its adjacent cells: the first cell to touch an edge
/// becomes the "plus" side; interior facets have exactly two cells, boundary
/// facets carry a region tag instead of a minus cell.
struct Mesh2D {
    struct Facet {
        int v0 = -1; // endpoints in the plus cell's traversal order
        int v1 = -1;
        int cell_plus = -1;
        int local_plus = -1; // local edge index in cell_plus
        int cell_minus = -1;
        int local_minus = -1;
        int tag = -1; // boundary region tag, boundary facets only

        bool interior() const { return cell_minus >= 0; }
    };

    std::vector<std::array<double, 2>> vertices;
    std::vector<std::array<int, 3>> cells;
    std::vector<Facet> facets;
    std::vector<double> cell_areas;

    int num_cells() const { return static_cast<int>(cells.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_facets() const { return static_cast<int>(facets.size()); }
    double area(int cell) const { return cell_areas[static_cast<std::size_t>(cell)]; }

    /// Distinct boundary tags present, sorted ascending.
    std::vector<int> boundary_tags() const;
};

/// Builds facet connectivity and validates conformity/orientation.
/// boundary_tag(midpoint_x, midpoint_y) assigns region tags to boundary facets.
Mesh2D build_mesh(std::vector<std::array<double, 2>> vertices,
                  std::vector<std::array<int, 3>> cells,
                  const std::function<int(double, double)>& boundary_tag);

/// Uniform triangulation of the box [x0,x1] x [y0,y1] with nx*ny squares,
/// each split along its up-diagonal. Boundary tags: left 1, right 2,
/// bottom 3, top 4.
Mesh2D structured_triangle_mesh(int nx, int ny, std::array<double, 4> box = {0.0, 1.0, 0.0, 1.0});

constexpr int kTagLeft = 1;
constexpr int kTagRight = 2;
constexpr int kTagBottom = 3;
constexpr int kTagTop = 4;

/// Penalty length scale of a facet: min of the adjacent cell areas over the
/// facet length (interior), or cell area over facet length (boundary).
double facet_measure_h(const Mesh2D& mesh, int facet);

double facet_length(const Mesh2D& mesh, int facet);

/// Plain-text fixture format (see README): vertex list, cell list, boundary
/// tag list, line oriented.
void save_mesh_text(const Mesh2D& mesh, std::ostream& out);
Mesh2D load_mesh_text(std::istream& in);

} // namespace dgforge::femcore
