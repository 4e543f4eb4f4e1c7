#include "dgforge/femcore/coord_function.hpp"
#include "dgforge/femcore/geometry.hpp"
#include "dgforge/femcore/interpolate.hpp"
#include "dgforge/femcore/space.hpp"

#include <Eigen/Dense>

namespace dgforge::femcore {

void DiscreteField::value(int cell, const std::array<double, 2>& ref, std::span<double> out) const
{
    const int n = space->local_dim();
    const int m = space->components();
    double phi[15];
    space->basis().eval(ref[0], ref[1], std::span<double>(phi, static_cast<std::size_t>(n)));
    for (int c = 0; c < m; ++c) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += coeffs[space->dof(cell, c, k)] * phi[k];
        out[static_cast<std::size_t>(c)] = acc;
    }
}

void DiscreteField::gradient(int cell, const std::array<double, 2>& ref, std::span<double> out) const
{
    const int n = space->local_dim();
    const int m = space->components();
    double gx[15], gy[15];
    space->basis().eval_grad(ref[0], ref[1], std::span<double>(gx, static_cast<std::size_t>(n)),
                             std::span<double>(gy, static_cast<std::size_t>(n)));
    const CellGeometry geom = cell_geometry(space->mesh(), cell);
    for (int c = 0; c < m; ++c) {
        double ax = 0.0, ay = 0.0;
        for (int k = 0; k < n; ++k) {
            const double w = coeffs[space->dof(cell, c, k)];
            ax += w * gx[k];
            ay += w * gy[k];
        }
        const auto g = geom.physical_gradient(ax, ay);
        out[static_cast<std::size_t>(2 * c)] = g[0];
        out[static_cast<std::size_t>(2 * c + 1)] = g[1];
    }
}

CoordFunction::CoordFunction(const symexpr::Vector& components)
    : plan_(std::span<const symexpr::Expr>(components.entries().data(), components.entries().size()))
{
    axes_.reserve(plan_.inputs().size());
    for (const symexpr::Expr& t : plan_.inputs()) {
        if (t.kind() != symexpr::Kind::Coordinate)
            throw EvalError("CoordFunction: expression depends on non-coordinate symbols");
        axes_.push_back(t.node().index);
    }
    in_.resize(axes_.size());
}

void CoordFunction::eval(double x, double y, std::span<double> out) const
{
    for (std::size_t i = 0; i < axes_.size(); ++i) in_[i] = axes_[i] == 0 ? x : y;
    plan_.evaluate(in_, out, scratch_);
}

double CoordFunction::eval1(double x, double y) const
{
    double out = 0.0;
    eval(x, y, std::span<double>(&out, 1));
    return out;
}

DiscreteField interpolate(const symexpr::Vector& expr, const DGSpace& space)
{
    if (expr.size() != space.components())
        throw ShapeError("interpolate: component count mismatch");
    const CoordFunction f(expr);
    const auto& nodes = space.basis().interpolation_nodes();
    const int n = space.local_dim();
    const int m = space.components();

    Eigen::MatrixXd vand(n, n);
    std::vector<double> phi(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        space.basis().eval(nodes[static_cast<std::size_t>(k)][0], nodes[static_cast<std::size_t>(k)][1],
                           phi);
        for (int j = 0; j < n; ++j) vand(k, j) = phi[static_cast<std::size_t>(j)];
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(vand);

    DiscreteField field(space);
    Eigen::MatrixXd rhs(n, m);
    std::vector<double> vals(static_cast<std::size_t>(m));
    for (int cell = 0; cell < space.mesh().num_cells(); ++cell) {
        const CellGeometry geom = cell_geometry(space.mesh(), cell);
        for (int k = 0; k < n; ++k) {
            const auto x = geom.to_physical(nodes[static_cast<std::size_t>(k)]);
            f.eval(x[0], x[1], vals);
            for (int c = 0; c < m; ++c) rhs(k, c) = vals[static_cast<std::size_t>(c)];
        }
        const Eigen::MatrixXd sol = lu.solve(rhs);
        for (int c = 0; c < m; ++c)
            for (int k = 0; k < n; ++k) field.coeffs[space.dof(cell, c, k)] = sol(k, c);
    }
    return field;
}

} // namespace dgforge::femcore
