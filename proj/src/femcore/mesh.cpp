#include "dgforge/femcore/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace dgforge::femcore {

namespace {

double signed_area(const std::array<double, 2>& a, const std::array<double, 2>& b,
                   const std::array<double, 2>& c)
{
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

} // namespace

std::vector<int> Mesh2D::boundary_tags() const
{
    std::set<int> tags;
    for (const Facet& f : facets)
        if (!f.interior()) tags.insert(f.tag);
    return {tags.begin(), tags.end()};
}

namespace {

Mesh2D build_connectivity(std::vector<std::array<double, 2>> vertices,
                          std::vector<std::array<int, 3>> cells)
{
    Mesh2D mesh;
    mesh.vertices = std::move(vertices);
    mesh.cells = std::move(cells);

    mesh.cell_areas.resize(mesh.cells.size());
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const auto& t = mesh.cells[c];
        for (int v : t)
            if (v < 0 || v >= mesh.num_vertices())
                throw MeshError("build_mesh: cell references missing vertex");
        const double a = signed_area(mesh.vertices[static_cast<std::size_t>(t[0])],
                                     mesh.vertices[static_cast<std::size_t>(t[1])],
                                     mesh.vertices[static_cast<std::size_t>(t[2])]);
        if (a <= 0.0)
            throw MeshError("build_mesh: cell " + std::to_string(c) +
                            " is degenerate or not counter-clockwise");
        mesh.cell_areas[c] = a;
    }

    std::map<std::pair<int, int>, int> edge_to_facet;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const auto& t = mesh.cells[static_cast<std::size_t>(c)];
        for (int k = 0; k < 3; ++k) {
            const int a = t[static_cast<std::size_t>(k)];
            const int b = t[static_cast<std::size_t>((k + 1) % 3)];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = edge_to_facet.find(key);
            if (it == edge_to_facet.end()) {
                Mesh2D::Facet f;
                f.v0 = a;
                f.v1 = b;
                f.cell_plus = c;
                f.local_plus = k;
                edge_to_facet.emplace(key, mesh.num_facets());
                mesh.facets.push_back(f);
            } else {
                Mesh2D::Facet& f = mesh.facets[static_cast<std::size_t>(it->second)];
                if (f.cell_minus >= 0)
                    throw MeshError("build_mesh: edge shared by more than two cells");
                f.cell_minus = c;
                f.local_minus = k;
            }
        }
    }

    return mesh;
}

} // namespace

Mesh2D build_mesh(std::vector<std::array<double, 2>> vertices,
                  std::vector<std::array<int, 3>> cells,
                  const std::function<int(double, double)>& boundary_tag)
{
    Mesh2D mesh = build_connectivity(std::move(vertices), std::move(cells));
    for (Mesh2D::Facet& f : mesh.facets) {
        if (f.interior()) continue;
        const auto& a = mesh.vertices[static_cast<std::size_t>(f.v0)];
        const auto& b = mesh.vertices[static_cast<std::size_t>(f.v1)];
        f.tag = boundary_tag(0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]));
        if (f.tag < 0) throw MeshError("build_mesh: boundary facet without region tag");
    }
    return mesh;
}

Mesh2D structured_triangle_mesh(int nx, int ny, std::array<double, 4> box)
{
    if (nx < 1 || ny < 1) throw MeshError("structured_triangle_mesh: need nx, ny >= 1");
    const double x0 = box[0], x1 = box[1], y0 = box[2], y1 = box[3];
    if (!(x1 > x0) || !(y1 > y0)) throw MeshError("structured_triangle_mesh: degenerate box");

    std::vector<std::array<double, 2>> vertices;
    vertices.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            vertices.push_back({x0 + (x1 - x0) * i / nx, y0 + (y1 - y0) * j / ny});

    auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
    std::vector<std::array<int, 3>> cells;
    cells.reserve(static_cast<std::size_t>(2 * nx * ny));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            cells.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }

    const double eps = 1e-12 * std::max(x1 - x0, y1 - y0);
    auto tag = [=](double mx, double my) {
        if (std::abs(mx - x0) < eps) return kTagLeft;
        if (std::abs(mx - x1) < eps) return kTagRight;
        if (std::abs(my - y0) < eps) return kTagBottom;
        if (std::abs(my - y1) < eps) return kTagTop;
        return -1;
    };
    return build_mesh(std::move(vertices), std::move(cells), tag);
}

double facet_length(const Mesh2D& mesh, int facet)
{
    const Mesh2D::Facet& f = mesh.facets[static_cast<std::size_t>(facet)];
    const auto& a = mesh.vertices[static_cast<std::size_t>(f.v0)];
    const auto& b = mesh.vertices[static_cast<std::size_t>(f.v1)];
    return std::hypot(b[0] - a[0], b[1] - a[1]);
}

double facet_measure_h(const Mesh2D& mesh, int facet)
{
    const Mesh2D::Facet& f = mesh.facets[static_cast<std::size_t>(facet)];
    const double len = facet_length(mesh, facet);
    if (f.interior())
        return std::min(mesh.area(f.cell_plus), mesh.area(f.cell_minus)) / len;
    return mesh.area(f.cell_plus) / len;
}

void save_mesh_text(const Mesh2D& mesh, std::ostream& out)
{
    out << "dgforge-mesh 1\n";
    out << "vertices " << mesh.num_vertices() << "\n";
    out.precision(17);
    for (const auto& v : mesh.vertices) out << v[0] << " " << v[1] << "\n";
    out << "cells " << mesh.num_cells() << "\n";
    for (const auto& c : mesh.cells) out << c[0] << " " << c[1] << " " << c[2] << "\n";
    int nb = 0;
    for (const auto& f : mesh.facets)
        if (!f.interior()) ++nb;
    out << "boundary " << nb << "\n";
    for (const auto& f : mesh.facets)
        if (!f.interior()) out << f.v0 << " " << f.v1 << " " << f.tag << "\n";
}

Mesh2D load_mesh_text(std::istream& in)
{
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "dgforge-mesh" || version != 1)
        throw MeshError("load_mesh_text: not a dgforge mesh file");

    std::string section;
    int n = 0;
    in >> section >> n;
    if (section != "vertices" || n < 3) throw MeshError("load_mesh_text: bad vertex section");
    std::vector<std::array<double, 2>> vertices(static_cast<std::size_t>(n));
    for (auto& v : vertices) in >> v[0] >> v[1];

    in >> section >> n;
    if (section != "cells" || n < 1) throw MeshError("load_mesh_text: bad cell section");
    std::vector<std::array<int, 3>> cells(static_cast<std::size_t>(n));
    for (auto& c : cells) in >> c[0] >> c[1] >> c[2];

    in >> section >> n;
    if (section != "boundary") throw MeshError("load_mesh_text: bad boundary section");
    std::map<std::pair<int, int>, int> tags;
    for (int i = 0; i < n; ++i) {
        int a, b, t;
        in >> a >> b >> t;
        tags[{std::min(a, b), std::max(a, b)}] = t;
    }
    if (!in) throw MeshError("load_mesh_text: truncated file");

    Mesh2D mesh = build_connectivity(std::move(vertices), std::move(cells));
    for (Mesh2D::Facet& f : mesh.facets) {
        if (f.interior()) continue;
        auto it = tags.find({std::min(f.v0, f.v1), std::max(f.v0, f.v1)});
        if (it == tags.end()) throw MeshError("load_mesh_text: boundary facet missing tag");
        f.tag = it->second;
    }
    return mesh;
}

} // namespace dgforge::femcore
