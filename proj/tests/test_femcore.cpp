#include <gtest/gtest.h>

#include "dgforge/femcore/basis.hpp"
#include "dgforge/femcore/geometry.hpp"
#include "dgforge/femcore/interpolate.hpp"
#include "dgforge/femcore/mesh.hpp"
#include "dgforge/femcore/quadrature.hpp"
#include "dgforge/femcore/space.hpp"
#include "dgforge/symexpr/expr.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fem = dgforge::femcore;
namespace sx = dgforge::symexpr;

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST(Mesh, UnitSquareCounts)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(1, 1);
    EXPECT_EQ(mesh.num_cells(), 2);
    EXPECT_EQ(mesh.num_vertices(), 4);
    EXPECT_EQ(mesh.num_facets(), 5);
    int interior = 0;
    for (const auto& f : mesh.facets)
        if (f.interior()) ++interior;
    EXPECT_EQ(interior, 1);

    EXPECT_EQ(fem::structured_triangle_mesh(32, 32).num_cells(), 2048);
}

TEST(Mesh, TotalAreaMatchesBox)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(7, 3, {-1.0, 2.0, 0.5, 2.5});
    const double area = std::accumulate(mesh.cell_areas.begin(), mesh.cell_areas.end(), 0.0);
    EXPECT_NEAR(area, 3.0 * 2.0, 1e-14);
}

TEST(Mesh, DegenerateInputsRejected)
{
    EXPECT_THROW(fem::structured_triangle_mesh(0, 1), dgforge::MeshError);
    EXPECT_THROW(fem::structured_triangle_mesh(2, 2, {0.0, 0.0, 0.0, 1.0}), dgforge::MeshError);
    // Clockwise cell.
    EXPECT_THROW(fem::build_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 2, 1}},
                                 [](double, double) { return 1; }),
                 dgforge::MeshError);
}

TEST(Mesh, FacetMeasureHandValues)
{
    // Two right triangles with legs of length 1 sharing the diagonal.
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(1, 1);
    for (int f = 0; f < mesh.num_facets(); ++f) {
        if (mesh.facets[static_cast<std::size_t>(f)].interior())
            EXPECT_NEAR(fem::facet_measure_h(mesh, f), 0.5 / std::sqrt(2.0), 1e-15);
        else
            EXPECT_NEAR(fem::facet_measure_h(mesh, f), 0.5, 1e-15);
    }
}

TEST(Mesh, RefinementHalvesFacetMeasure)
{
    const fem::Mesh2D coarse = fem::structured_triangle_mesh(2, 2);
    const fem::Mesh2D fine = fem::structured_triangle_mesh(4, 4);
    auto min_h = [](const fem::Mesh2D& m) {
        double h = 1e300;
        for (int f = 0; f < m.num_facets(); ++f) h = std::min(h, fem::facet_measure_h(m, f));
        return h;
    };
    EXPECT_NEAR(min_h(coarse), 2.0 * min_h(fine), 1e-15);
}

TEST(Mesh, BoundaryTagsBySide)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(3, 3);
    EXPECT_EQ(mesh.boundary_tags(), (std::vector<int>{1, 2, 3, 4}));
    for (const auto& f : mesh.facets) {
        if (f.interior()) continue;
        const auto& a = mesh.vertices[static_cast<std::size_t>(f.v0)];
        const auto& b = mesh.vertices[static_cast<std::size_t>(f.v1)];
        const double mx = 0.5 * (a[0] + b[0]);
        if (f.tag == fem::kTagLeft) EXPECT_NEAR(mx, 0.0, 1e-14);
        if (f.tag == fem::kTagRight) EXPECT_NEAR(mx, 1.0, 1e-14);
    }
}

TEST(Mesh, AdjacencyIsInvolutionWithOppositeNormals)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(3, 2);
    for (const auto& f : mesh.facets) {
        if (!f.interior()) continue;
        const auto np = fem::outward_normal(mesh, f.cell_plus, f.local_plus);
        const auto nm = fem::outward_normal(mesh, f.cell_minus, f.local_minus);
        EXPECT_NEAR(np[0] + nm[0], 0.0, 1e-14);
        EXPECT_NEAR(np[1] + nm[1], 0.0, 1e-14);
    }
}

TEST(Mesh, TextRoundTrip)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(2, 3, {0.0, 2.0, -1.0, 1.0});
    std::stringstream ss;
    fem::save_mesh_text(mesh, ss);
    const fem::Mesh2D loaded = fem::load_mesh_text(ss);
    ASSERT_EQ(loaded.num_vertices(), mesh.num_vertices());
    ASSERT_EQ(loaded.num_cells(), mesh.num_cells());
    ASSERT_EQ(loaded.num_facets(), mesh.num_facets());
    for (int f = 0; f < mesh.num_facets(); ++f) {
        EXPECT_EQ(loaded.facets[static_cast<std::size_t>(f)].tag,
                  mesh.facets[static_cast<std::size_t>(f)].tag);
    }
    std::stringstream bad("dgforge-mesh 2\n");
    EXPECT_THROW(fem::load_mesh_text(bad), dgforge::MeshError);
}

TEST(Quadrature, CentroidRule)
{
    const fem::QuadratureRule rule = fem::reference_cell_quadrature(1);
    ASSERT_EQ(rule.points.size(), 1u);
    EXPECT_NEAR(rule.points[0][0], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(rule.weights[0], 0.5, 1e-15);
}

TEST(Quadrature, WeightsPositiveAndSumToReferenceArea)
{
    for (int deg = 0; deg <= 12; ++deg) {
        const fem::QuadratureRule rule = fem::reference_cell_quadrature(deg);
        double sum = 0.0;
        for (double w : rule.weights) {
            EXPECT_GT(w, 0.0);
            sum += w;
        }
        EXPECT_NEAR(sum, 0.5, 1e-14);
    }
}

TEST(Quadrature, ExactForMonomialsUpToDeclaredDegree)
{
    // Oracle: integral of x^a y^b over the reference triangle is a! b! / (a+b+2)!.
    for (int deg = 1; deg <= 12; ++deg) {
        const fem::QuadratureRule rule = fem::reference_cell_quadrature(deg);
        for (int a = 0; a + 0 <= deg; ++a) {
            for (int b = 0; a + b <= deg; ++b) {
                double acc = 0.0;
                for (std::size_t q = 0; q < rule.points.size(); ++q)
                    acc += rule.weights[q] *
                           std::pow(rule.points[q][0], a) * std::pow(rule.points[q][1], b);
                const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                EXPECT_NEAR(acc, exact, 1e-14) << "deg=" << deg << " a=" << a << " b=" << b;
            }
        }
    }
}

TEST(Quadrature, FacetRuleIntegratesPolynomials)
{
    for (int deg = 0; deg <= 10; ++deg) {
        const fem::FacetQuadratureRule rule = fem::reference_facet_quadrature(deg);
        for (int p = 0; p <= deg; ++p) {
            double acc = 0.0;
            for (std::size_t q = 0; q < rule.points.size(); ++q)
                acc += rule.weights[q] * std::pow(rule.points[q], p);
            EXPECT_NEAR(acc, 1.0 / (p + 1), 1e-14);
        }
    }
}

TEST(Basis, DegreeZeroIsConstant)
{
    const fem::ReferenceBasis basis(0);
    ASSERT_EQ(basis.size(), 1);
    double v1, v2;
    basis.eval(0.1, 0.2, std::span<double>(&v1, 1));
    basis.eval(0.7, 0.1, std::span<double>(&v2, 1));
    EXPECT_DOUBLE_EQ(v1, v2);
}

TEST(Basis, OrthonormalAgainstReferenceMass)
{
    for (int deg = 0; deg <= 4; ++deg) {
        const fem::ReferenceBasis basis(deg);
        const int n = basis.size();
        EXPECT_EQ(n, (deg + 1) * (deg + 2) / 2);
        const fem::QuadratureRule rule = fem::reference_cell_quadrature(2 * deg);
        std::vector<double> mass(static_cast<std::size_t>(n * n), 0.0);
        std::vector<double> phi(static_cast<std::size_t>(n));
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            basis.eval(rule.points[q][0], rule.points[q][1], phi);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    mass[static_cast<std::size_t>(i * n + j)] += rule.weights[q] * phi[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(j)];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                EXPECT_NEAR(mass[static_cast<std::size_t>(i * n + j)], i == j ? 1.0 : 0.0, 1e-12);
    }
}

TEST(Geometry, ReferenceTriangleMapsToItself)
{
    const fem::Mesh2D mesh =
        fem::build_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}, [](double, double) { return 1; });
    const fem::CellGeometry g = fem::cell_geometry(mesh, 0);
    EXPECT_DOUBLE_EQ(g.det, 1.0);
    const auto p = g.to_physical({0.3, 0.4});
    EXPECT_DOUBLE_EQ(p[0], 0.3);
    EXPECT_DOUBLE_EQ(p[1], 0.4);
}

TEST(Geometry, GradientTransformMatchesFiniteDifferences)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(2, 2, {0.0, 1.3, 0.0, 0.9});
    const fem::ReferenceBasis basis(3);
    const int n = basis.size();
    const fem::CellGeometry g = fem::cell_geometry(mesh, 3);
    const std::array<double, 2> ref = {0.21, 0.37};
    std::vector<double> gx(static_cast<std::size_t>(n)), gy(static_cast<std::size_t>(n));
    basis.eval_grad(ref[0], ref[1], gx, gy);

    const double h = 1e-7;
    const auto x0 = g.to_physical(ref);
    std::vector<double> vp(static_cast<std::size_t>(n)), vm(static_cast<std::size_t>(n));
    for (int axis = 0; axis < 2; ++axis) {
        auto xp = x0, xm = x0;
        xp[static_cast<std::size_t>(axis)] += h;
        xm[static_cast<std::size_t>(axis)] -= h;
        basis.eval(g.to_reference(xp)[0], g.to_reference(xp)[1], vp);
        basis.eval(g.to_reference(xm)[0], g.to_reference(xm)[1], vm);
        for (int k = 0; k < n; ++k) {
            const double fd = (vp[static_cast<std::size_t>(k)] - vm[static_cast<std::size_t>(k)]) / (2.0 * h);
            const auto grad = g.physical_gradient(gx[static_cast<std::size_t>(k)], gy[static_cast<std::size_t>(k)]);
            EXPECT_NEAR(grad[static_cast<std::size_t>(axis)], fd, 1e-6);
        }
    }
}

TEST(Interpolate, ConstantAndPolynomialExactness)
{
    const fem::Mesh2D mesh = fem::structured_triangle_mesh(3, 3);
    const sx::Expr x = sx::coordinate(0);
    const sx::Expr y = sx::coordinate(1);
    for (int deg = 0; deg <= 3; ++deg) {
        const fem::DGSpace space(mesh, deg, 1);
        sx::Expr p = sx::constant(1.0);
        if (deg >= 1) p = p + 2.0 * x - y;
        if (deg >= 2) p = p + x * y;
        if (deg >= 3) p = p + sx::pow(x, 3.0);
        const fem::DiscreteField f = fem::interpolate(sx::Vector({p}), space);

        const fem::CoordFunction exact(sx::Vector({p}));
        for (int cell = 0; cell < mesh.num_cells(); ++cell) {
            const fem::CellGeometry g = fem::cell_geometry(mesh, cell);
            const std::array<double, 2> ref = {0.3, 0.5};
            const auto xp = g.to_physical(ref);
            double v;
            f.value(cell, ref, std::span<double>(&v, 1));
            EXPECT_NEAR(v, exact.eval1(xp[0], xp[1]), 1e-12);
        }
    }
}

TEST(Interpolate, ExpConvergesAtOrderEllPlusOne)
{
    const sx::Expr x = sx::coordinate(0);
    const sx::Expr y = sx::coordinate(1);
    const sx::Vector exact({sx::exp(x - y)});
    for (int deg = 1; deg <= 2; ++deg) {
        std::vector<double> errors;
        for (int n : {4, 8, 16}) {
            const fem::Mesh2D mesh = fem::structured_triangle_mesh(n, n);
            const fem::DGSpace space(mesh, deg, 1);
            const fem::DiscreteField f = fem::interpolate(exact, space);
            const fem::CoordFunction fe(exact);
            const fem::QuadratureRule rule = fem::reference_cell_quadrature(2 * deg + 2);
            double err2 = 0.0;
            for (int cell = 0; cell < mesh.num_cells(); ++cell) {
                const fem::CellGeometry g = fem::cell_geometry(mesh, cell);
                for (std::size_t q = 0; q < rule.points.size(); ++q) {
                    const auto xp = g.to_physical(rule.points[q]);
                    double v;
                    f.value(cell, rule.points[q], std::span<double>(&v, 1));
                    const double d = v - fe.eval1(xp[0], xp[1]);
                    err2 += rule.weights[q] * g.det * d * d;
                }
            }
            errors.push_back(std::sqrt(err2));
        }
        const double rate = std::log2(errors[0] / errors[1]);
        const double rate2 = std::log2(errors[1] / errors[2]);
        EXPECT_NEAR(rate, deg + 1.0, 0.2);
        EXPECT_NEAR(rate2, deg + 1.0, 0.1);
    }
}
