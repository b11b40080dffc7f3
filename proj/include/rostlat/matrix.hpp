#ifndef ROSTLAT_MATRIX_HPP
#define ROSTLAT_MATRIX_HPP

// Exact linear algebra over Z and Q: dense matrices, Bareiss determinants,
// Gauss-Jordan solving. No floating point anywhere.

#include <cstddef>
#include <utility>
#include <vector>

#include "rostlat/errors.hpp"
#include "rostlat/numeric.hpp"

namespace rostlat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows_init) {
        rows_ = rows_init.size();
        cols_ = rows_ == 0 ? 0 : rows_init.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& row : rows_init) {
            if (row.size() != cols_) throw Error("ragged matrix initializer");
            for (long long x : row) a_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
            }
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw Error("matrix apply shape mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    RatVector apply(const RatVector& v) const {
        if (cols_ != v.size()) throw Error("matrix apply shape mismatch");
        RatVector r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += Rat(at(i, j)) * v[j];
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_; // row-major, length rows*cols
};

// Fraction-free Bareiss elimination; every division below is exact.
inline Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

// Exact solution of m*x = rhs for square invertible m.
inline RatVector solve_rational(const IntMatrix& m, const RatVector& rhs) {
    if (m.rows() != m.cols()) throw Error("solve_rational: matrix not square");
    if (m.rows() != rhs.size()) throw Error("solve_rational: rhs length mismatch");
    const std::size_t n = m.rows();
    // augmented [A | rhs] over Q, Gauss-Jordan with first-nonzero pivoting
    std::vector<RatVector> a(n, RatVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n] = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("solve_rational: singular matrix");
        std::swap(a[col], a[piv]);
        const Rat d = a[col][col];
        for (std::size_t j = col; j <= n; ++j) a[col][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

// Columns of m^-1; throws SingularMatrix. One elimination instead of n solves.
inline std::vector<RatVector> rational_inverse_columns(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<RatVector> a(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("rational_inverse_columns: singular matrix");
        std::swap(a[col], a[piv]);
        const Rat d = a[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) a[col][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<RatVector> cols(n, RatVector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = a[i][n + j];
    return cols;
}

} // namespace rostlat

#endif
