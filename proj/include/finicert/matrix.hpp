#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finicert/errors.hpp"
#include "finicert/polynomial.hpp"
#include "finicert/scalar.hpp"

namespace finicert {

inline bool entry_is_zero(const Scalar& s) { return scalar_is_zero(s); }
inline bool entry_is_zero(const Polynomial& p) { return p.is_zero(); }

/// Dense matrix over an exact ring (rationals or polynomials). Entries of
/// a polynomial matrix must share one arity; constructors take a fill
/// value so that arity is always pinned explicitly.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix needs positive dimensions");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, data_.front()); // fill overwritten below
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < o.cols_; ++j) {
                T acc = at(i, 0) * o.at(0, j);
                for (std::size_t k = 1; k < cols_; ++k)
                    acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = std::move(acc);
            }
        }
        return r;
    }

    Matrix scale(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    T trace() const {
        require_square();
        T acc = at(0, 0);
        for (std::size_t i = 1; i < rows_; ++i) acc = acc + at(i, i);
        return acc;
    }

    /// A^e for e >= 1 by repeated squaring.
    Matrix pow(unsigned e) const {
        require_square();
        if (e == 0) throw InputError("matrix power needs a positive exponent");
        Matrix base = *this;
        std::optional<Matrix> acc;
        while (e > 0) {
            if (e & 1) acc = acc ? *acc * base : base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return *acc;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!entry_is_zero(v)) return false;
        return true;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }
    void require_square() const {
        if (rows_ != cols_) throw DimensionMismatch("square matrix required");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Polynomial>;

QMatrix q_zero(std::size_t rows, std::size_t cols);
QMatrix q_identity(std::size_t n);
PolyMatrix poly_zero(std::size_t rows, std::size_t cols, std::size_t arity);
PolyMatrix poly_identity(std::size_t n, std::size_t arity);

/// Entry-wise constant embedding of a rational matrix.
PolyMatrix to_poly_matrix(const QMatrix& m, std::size_t arity);
/// Entry-wise evaluation at a rational point.
QMatrix evaluate(const PolyMatrix& m, const std::vector<Scalar>& point);

// Exact Gaussian elimination over the rationals.
Scalar determinant(QMatrix a);
std::size_t rank(QMatrix a);
QMatrix inverse(const QMatrix& a); // throws InputError when singular

/// One solution of a x = b, or nullopt when inconsistent. (When the
/// kernel is nontrivial, free variables are set to zero.)
std::optional<std::vector<Scalar>> solve(QMatrix a, std::vector<Scalar> b);

/// Basis of {x : a x = 0}, one vector per free column of the echelon form.
std::vector<std::vector<Scalar>> nullspace(QMatrix a);

} // namespace finicert
