#pragma once

#include "dgforge/common.hpp"

#include <array>
#include <vector>

namespace dgforge::femcore {

/// Quadrature on the reference triangle (0,0)-(1,0)-(0,1). Weights are
/// strictly positive and sum to the reference area 1/2.
struct QuadratureRule {
    std::vector<std::array<double, 2>> points;
    std::vector<double> weights;
    int degree = 0; // declared polynomial exactness
};

/// Rule exact for polynomials up to the requested degree (degree <= 12).
/// Degree <= 1 is the one-point centroid rule; higher degrees use a
/// Gauss-Legendre product rule collapsed onto the triangle.
QuadratureRule reference_cell_quadrature(int degree);

/// Gauss-Legendre rule on [0,1]; weights sum to 1.
struct FacetQuadratureRule {
    std::vector<double> points;
    std::vector<double> weights;
    int degree = 0;
};

FacetQuadratureRule reference_facet_quadrature(int degree);

/// Nodes/weights of the n-point Gauss-Legendre rule on [0,1].
void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights);

} // namespace dgforge::femcore
