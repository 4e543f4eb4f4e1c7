#pragma once

#include "dgforge/femcore/space.hpp"
#include "dgforge/symexpr/tensor.hpp"

namespace dgforge::femcore {

/// Cellwise interpolant at the uniform lattice nodes; exact for polynomials
/// of degree <= l. The expression may only reference coordinates.
DiscreteField interpolate(const symexpr::Vector& expr, const DGSpace& space);

} // namespace dgforge::femcore
