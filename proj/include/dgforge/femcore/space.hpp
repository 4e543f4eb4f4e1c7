#pragma once

#include "dgforge/femcore/basis.hpp"
#include "dgforge/femcore/mesh.hpp"

#include <Eigen/Core>

#include <span>

namespace dgforge::femcore {

/// Broken polynomial space [P_l]^m over a triangle mesh: one local basis per
/// cell, no inter-element continuity. The caller keeps the mesh alive.
class DGSpace {
public:
    DGSpace(const Mesh2D& mesh, int degree, int components)
        : mesh_(&mesh), basis_(degree), components_(components)
    {
        if (components < 1) throw Error("DGSpace: need at least one component");
    }

    const Mesh2D& mesh() const { return *mesh_; }
    const ReferenceBasis& basis() const { return basis_; }
    int degree() const { return basis_.degree(); }
    int components() const { return components_; }
    int local_dim() const { return basis_.size(); }
    int num_dofs() const { return mesh_->num_cells() * components_ * local_dim(); }

    int dof(int cell, int comp, int k) const
    {
        return (cell * components_ + comp) * local_dim() + k;
    }

private:
    const Mesh2D* mesh_;
    ReferenceBasis basis_;
    int components_;
};

/// Coefficient vector over a DGSpace.
struct DiscreteField {
    const DGSpace* space = nullptr;
    Eigen::VectorXd coeffs;

    DiscreteField() = default;
    explicit DiscreteField(const DGSpace& s) : space(&s), coeffs(Eigen::VectorXd::Zero(s.num_dofs())) {}

    /// Componentwise value at a reference point of a cell.
    void value(int cell, const std::array<double, 2>& ref, std::span<double> out) const;
    /// Componentwise physical gradient (row-major m x 2) at a reference point.
    void gradient(int cell, const std::array<double, 2>& ref, std::span<double> out) const;
};

} // namespace dgforge::femcore
