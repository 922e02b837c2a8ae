#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace qmod {

// Dense exact linear algebra over a field scalar K (Laurent fractions or a
// cyclotomic field). Row-major.
template <typename K>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
        return r;
    }
    Matrix scaled(const K& s) const {
        Matrix r = *this;
        for (auto& v : r.a) v *= s;
        return r;
    }
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_scalar_multiple_of_identity(K* scalar = nullptr) const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (i != j && !at(i, j).is_zero()) return false;
                if (i == j && !(at(i, j) == at(0, 0))) return false;
            }
        if (scalar) *scalar = at(0, 0);
        return true;
    }
};

// in-place reduced row echelon form; returns pivot columns
template <typename K>
std::vector<int> rref(Matrix<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        K inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename K>
int rank(Matrix<K> m) {
    return static_cast<int>(rref(m).size());
}

// solve A x = b; nullopt if inconsistent (least-structure solution, free vars 0)
template <typename K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
    Matrix<K> m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols) = b[i];
    }
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<K> x(A.cols, K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(static_cast<int>(r), A.cols);
    return x;
}

// basis of the null space of A
template <typename K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> A) {
    auto pivots = rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(A.cols, K(0));
        v[c] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename K>
Matrix<K> inverse_matrix(const Matrix<K>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse_matrix: not square");
    Matrix<K> m(A.rows, 2 * A.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols + i) = K(1);
    }
    auto pivots = rref(m);
    if (static_cast<int>(pivots.size()) != A.rows || pivots.back() != A.rows - 1)
        throw std::domain_error("inverse_matrix: singular");
    Matrix<K> inv(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) inv.at(i, j) = m.at(i, A.cols + j);
    return inv;
}

}  // namespace qmod
