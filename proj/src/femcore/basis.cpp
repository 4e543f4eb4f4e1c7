#include "dgforge/femcore/basis.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace dgforge::femcore {

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Exact monomial integral over the reference triangle.
double triangle_monomial_integral(int a, int b)
{
    return factorial(a) * factorial(b) / factorial(a + b + 2);
}

} // namespace

ReferenceBasis::ReferenceBasis(int degree) : degree_(degree)
{
    if (degree < 0 || degree > 4)
        throw Error("ReferenceBasis: supported degrees are 0..4");

    for (int d = 0; d <= degree; ++d)
        for (int a = d; a >= 0; --a) exponents_.push_back({a, d - a});

    const int n = size();
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram(i, j) = triangle_monomial_integral(exponents_[static_cast<std::size_t>(i)][0] +
                                                        exponents_[static_cast<std::size_t>(j)][0],
                                                    exponents_[static_cast<std::size_t>(i)][1] +
                                                        exponents_[static_cast<std::size_t>(j)][1]);

    const Eigen::MatrixXd l = gram.llt().matrixL();
    const Eigen::MatrixXd c =
        l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(n, n));
    coeffs_.assign(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) coeffs_[static_cast<std::size_t>(i * n + j)] = c(i, j);

    if (degree == 0) {
        nodes_.push_back({1.0 / 3.0, 1.0 / 3.0});
    } else {
        for (int j = 0; j <= degree; ++j)
            for (int i = 0; i + j <= degree; ++i)
                nodes_.push_back({static_cast<double>(i) / degree, static_cast<double>(j) / degree});
    }
}

void ReferenceBasis::monomials(double x, double y, std::span<double> m) const
{
    double px[5], py[5];
    px[0] = py[0] = 1.0;
    for (int k = 1; k <= degree_; ++k) {
        px[k] = px[k - 1] * x;
        py[k] = py[k - 1] * y;
    }
    for (int j = 0; j < size(); ++j)
        m[static_cast<std::size_t>(j)] = px[exponents_[static_cast<std::size_t>(j)][0]] *
                                         py[exponents_[static_cast<std::size_t>(j)][1]];
}

void ReferenceBasis::eval(double x, double y, std::span<double> values) const
{
    const int n = size();
    double m[15];
    monomials(x, y, std::span<double>(m, static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += coeffs_[static_cast<std::size_t>(i * n + j)] * m[j];
        values[static_cast<std::size_t>(i)] = acc;
    }
}

void ReferenceBasis::eval_grad(double x, double y, std::span<double> ddx, std::span<double> ddy) const
{
    const int n = size();
    double mx[15], my[15];
    // Monomial derivatives: d/dx x^a y^b = a x^(a-1) y^b and symmetrically.
    double px[5], py[5];
    px[0] = py[0] = 1.0;
    for (int k = 1; k <= degree_; ++k) {
        px[k] = px[k - 1] * x;
        py[k] = py[k - 1] * y;
    }
    for (int j = 0; j < n; ++j) {
        const int a = exponents_[static_cast<std::size_t>(j)][0];
        const int b = exponents_[static_cast<std::size_t>(j)][1];
        mx[j] = a > 0 ? a * px[a - 1] * py[b] : 0.0;
        my[j] = b > 0 ? b * px[a] * py[b - 1] : 0.0;
    }
    for (int i = 0; i < n; ++i) {
        double ax = 0.0, ay = 0.0;
        for (int j = 0; j <= i; ++j) {
            const double c = coeffs_[static_cast<std::size_t>(i * n + j)];
            ax += c * mx[j];
            ay += c * my[j];
        }
        ddx[static_cast<std::size_t>(i)] = ax;
        ddy[static_cast<std::size_t>(i)] = ay;
    }
}

} // namespace dgforge::femcore
