#include "dgforge/femcore/quadrature.hpp"

#include <cmath>

namespace dgforge::femcore {

void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights)
{
    if (n < 1) throw Error("gauss_legendre_01: need n >= 1");
    points.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    // Nodes on [-1,1] by Newton iteration from the Chebyshev initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pm = (n == 1) ? 1.0 : p0;
            dp = n * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        points[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (x + 1.0);
        weights[static_cast<std::size_t>(n - 1 - i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

FacetQuadratureRule reference_facet_quadrature(int degree)
{
    if (degree < 0 || degree > 24) throw Error("reference_facet_quadrature: unsupported order");
    FacetQuadratureRule rule;
    const int n = std::max(1, (degree + 2) / 2); // exact to 2n-1 >= degree
    gauss_legendre_01(n, rule.points, rule.weights);
    rule.degree = 2 * n - 1;
    return rule;
}

QuadratureRule reference_cell_quadrature(int degree)
{
    if (degree < 0 || degree > 16) throw Error("reference_cell_quadrature: unsupported order");
    QuadratureRule rule;
    if (degree <= 1) {
        rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
        rule.weights = {0.5};
        rule.degree = 1;
        return rule;
    }
    // Collapsed product rule: x = xi (1 - eta), y = eta, Jacobian (1 - eta).
    // The eta integrand gains one degree, so use n with 2n-1 >= degree + 1.
    const int n = (degree + 3) / 2;
    std::vector<double> p, w;
    gauss_legendre_01(n, p, w);
    rule.points.reserve(static_cast<std::size_t>(n * n));
    rule.weights.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double xi = p[static_cast<std::size_t>(i)];
            const double eta = p[static_cast<std::size_t>(j)];
            rule.points.push_back({xi * (1.0 - eta), eta});
            rule.weights.push_back(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] *
                                   (1.0 - eta));
        }
    }
    rule.degree = degree;
    return rule;
}

} // namespace dgforge::femcore
