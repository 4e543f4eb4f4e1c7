#include "dgforge/symexpr/tensor.hpp"

#include <string>

namespace dgforge::symexpr {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw ShapeError(what);
}

} // namespace

Vector Vector::field(const std::string& family, int m, TraceSide side)
{
    std::vector<Expr> e;
    e.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) e.push_back(field_component(family, j, side));
    return Vector(std::move(e));
}

Vector Vector::coordinates(int d)
{
    std::vector<Expr> e;
    for (int i = 0; i < d; ++i) e.push_back(coordinate(i));
    return Vector(std::move(e));
}

Vector Vector::normal(int d)
{
    std::vector<Expr> e;
    for (int i = 0; i < d; ++i) e.push_back(normal_component(i));
    return Vector(std::move(e));
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = constant(1.0);
    return m;
}

Matrix Matrix::field_gradient(const std::string& family, int m, int d, TraceSide side)
{
    Matrix g(m, d);
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < d; ++l) g(j, l) = grad_component(family, j, l, side);
    return g;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Expr>> rows)
{
    const int r = static_cast<int>(rows.size());
    require(r > 0, "from_rows: empty matrix");
    const int c = static_cast<int>(rows.begin()->size());
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == c, "from_rows: ragged rows");
        int j = 0;
        for (const Expr& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::row(int i) const
{
    std::vector<Expr> e;
    e.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) e.push_back((*this)(i, j));
    return Vector(std::move(e));
}

Vector Matrix::col(int j) const
{
    std::vector<Expr> e;
    e.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
    return Vector(std::move(e));
}

Expr Matrix::trace() const
{
    require(rows_ == cols_, "trace: matrix must be square");
    std::vector<Expr> parts;
    for (int i = 0; i < rows_; ++i) parts.push_back((*this)(i, i));
    return make_sum(parts);
}

Vector operator+(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector +: size mismatch");
    std::vector<Expr> e;
    for (int i = 0; i < a.size(); ++i) e.push_back(a[i] + b[i]);
    return Vector(std::move(e));
}

Vector operator-(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector -: size mismatch");
    std::vector<Expr> e;
    for (int i = 0; i < a.size(); ++i) e.push_back(a[i] - b[i]);
    return Vector(std::move(e));
}

Vector operator*(const Expr& s, const Vector& v)
{
    std::vector<Expr> e;
    for (int i = 0; i < v.size(); ++i) e.push_back(s * v[i]);
    return Vector(std::move(e));
}

Vector operator*(double s, const Vector& v) { return constant(s) * v; }

Vector operator*(const Vector& v, const Expr& s) { return s * v; }

Vector operator*(const Vector& v, double s) { return constant(s) * v; }

Vector operator-(const Vector& v) { return constant(-1.0) * v; }

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix +: shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix -: shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
    return m;
}

Matrix operator*(const Expr& s, const Matrix& m)
{
    Matrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
    return r;
}

Matrix operator*(double s, const Matrix& m) { return constant(s) * m; }

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols() == b.rows(), "matrix *: inner dimension mismatch");
    Matrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            std::vector<Expr> parts;
            for (int k = 0; k < a.cols(); ++k) parts.push_back(a(i, k) * b(k, j));
            m(i, j) = make_sum(parts);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    require(a.cols() == v.size(), "matrix-vector *: dimension mismatch");
    std::vector<Expr> e;
    for (int i = 0; i < a.rows(); ++i) {
        std::vector<Expr> parts;
        for (int k = 0; k < a.cols(); ++k) parts.push_back(a(i, k) * v[k]);
        e.push_back(make_sum(parts));
    }
    return Vector(std::move(e));
}

Expr dot(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "dot: size mismatch");
    std::vector<Expr> parts;
    for (int i = 0; i < a.size(); ++i) parts.push_back(a[i] * b[i]);
    return make_sum(parts);
}

Matrix outer(const Vector& a, const Vector& b)
{
    Matrix m(a.size(), b.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

Expr inner(const Matrix& a, const Matrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "inner: shape mismatch");
    std::vector<Expr> parts;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) parts.push_back(a(i, j) * b(i, j));
    return make_sum(parts);
}

Matrix jacobian(const Vector& f, const Vector& u)
{
    Matrix m(f.size(), u.size());
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < u.size(); ++j) m(i, j) = diff(f[i], u[j]);
    return m;
}

Vector restrict_trace(const Vector& v, TraceSide side)
{
    std::vector<Expr> e;
    for (int i = 0; i < v.size(); ++i) e.push_back(restrict_trace(v[i], side));
    return Vector(std::move(e));
}

Matrix restrict_trace(const Matrix& m, TraceSide side)
{
    Matrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = restrict_trace(m(i, j), side);
    return r;
}

std::vector<Expr> berkowitz_charpoly(const Matrix& m)
{
    require(m.rows() == m.cols(), "berkowitz_charpoly: matrix must be square");
    const int n = m.rows();
    require(n >= 1 && n <= 4, "berkowitz_charpoly: supported sizes are 1..4");

    // Coefficient vector of the leading principal minor processed so far,
    // highest degree first; starts with the 0x0 polynomial "1".
    std::vector<Expr> coeffs = {constant(1.0)};

    for (int k = 1; k <= n; ++k) {
        const int p = k - 1; // order of the previous principal minor
        const Expr a = m(p, p);

        // s_j = R M^j C for the bordering row R, column C and previous minor M.
        std::vector<Expr> s;
        if (p > 0) {
            std::vector<Expr> w(static_cast<std::size_t>(p)); // M^j C
            for (int i = 0; i < p; ++i) w[static_cast<std::size_t>(i)] = m(i, p);
            for (int j = 0; j <= p - 1; ++j) {
                std::vector<Expr> parts;
                for (int i = 0; i < p; ++i) parts.push_back(m(p, i) * w[static_cast<std::size_t>(i)]);
                s.push_back(make_sum(parts));
                if (j < p - 1) {
                    std::vector<Expr> next(static_cast<std::size_t>(p));
                    for (int i = 0; i < p; ++i) {
                        std::vector<Expr> row_parts;
                        for (int l = 0; l < p; ++l)
                            row_parts.push_back(m(i, l) * w[static_cast<std::size_t>(l)]);
                        next[static_cast<std::size_t>(i)] = make_sum(row_parts);
                    }
                    w = std::move(next);
                }
            }
        }

        // Column of the lower-triangular Toeplitz factor: [1, -a, -s_0, -s_1, ...].
        std::vector<Expr> t;
        t.push_back(constant(1.0));
        t.push_back(-a);
        for (const Expr& sj : s) t.push_back(-sj);

        std::vector<Expr> next(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            std::vector<Expr> parts;
            for (int j = 0; j < k; ++j) {
                const int d = i - j;
                if (d < 0 || d >= static_cast<int>(t.size())) continue;
                if (j >= static_cast<int>(coeffs.size())) continue;
                parts.push_back(t[static_cast<std::size_t>(d)] * coeffs[static_cast<std::size_t>(j)]);
            }
            next[static_cast<std::size_t>(i)] = make_sum(parts);
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

} // namespace dgforge::symexpr
