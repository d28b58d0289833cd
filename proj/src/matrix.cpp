#include "finicert/matrix.hpp"

namespace finicert {

QMatrix q_zero(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, cols, Scalar(0));
}

QMatrix q_identity(std::size_t n) {
    QMatrix m = q_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

PolyMatrix poly_zero(std::size_t rows, std::size_t cols, std::size_t arity) {
    return PolyMatrix(rows, cols, Polynomial::zero(arity));
}

PolyMatrix poly_identity(std::size_t n, std::size_t arity) {
    PolyMatrix m = poly_zero(n, n, arity);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(arity, Scalar(1));
    return m;
}

PolyMatrix to_poly_matrix(const QMatrix& m, std::size_t arity) {
    PolyMatrix r = poly_zero(m.rows(), m.cols(), arity);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = Polynomial::constant(arity, m.at(i, j));
    return r;
}

QMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& point) {
    QMatrix r = q_zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(i, j).evaluate(point);
    return r;
}

namespace {

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row, in row order.
std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && scalar_is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(pivot, j), a.at(row, j));
        const Scalar inv = Scalar(1) / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || scalar_is_zero(a.at(i, col))) continue;
            const Scalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Scalar determinant(QMatrix a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && scalar_is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        const Scalar inv = Scalar(1) / a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (scalar_is_zero(a.at(i, col))) continue;
            const Scalar f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return det;
}

std::size_t rank(QMatrix a) { return rref(a).size(); }

QMatrix inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    QMatrix aug = q_zero(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    const auto pivots = rref(aug);
    // Pivots must all land in the left block; a pivot in the identity
    // half means the input had a rank deficit.
    std::size_t left_rank = 0;
    for (std::size_t c : pivots)
        if (c < n) ++left_rank;
    if (left_rank != n) throw InputError("matrix is singular");
    QMatrix inv = q_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<std::vector<Scalar>> solve(QMatrix a, std::vector<Scalar> b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    QMatrix aug = q_zero(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    // A pivot in the appended column marks an inconsistent row.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols(), Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

std::vector<std::vector<Scalar>> nullspace(QMatrix a) {
    const std::size_t n = a.cols();
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace finicert
