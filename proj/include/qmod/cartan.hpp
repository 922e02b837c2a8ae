#pragma once

#include "qmod/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qmod {

// Cartan datum: rank m, Cartan matrix (a_ij), symmetrizers d_i with
// d_i a_ij = d_j a_ji, number of positive roots N, and the denominator D
// (smallest positive integer with D(lambda,mu) in Z for lambda,mu in P).
struct CartanData {
    int m = 0;
    std::vector<std::vector<int>> a;  // Cartan matrix
    std::vector<int> d;               // coprime positive symmetrizers
    int N = 0;
    int D = 1;
    // Gram matrix of fundamental weights: (w_i, w_j) = (A^{-1})_{ji} d_j
    std::vector<std::vector<Rational>> gram;

    void validate() const {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (d[i] * a[i][j] != d[j] * a[j][i])
                    throw std::invalid_argument("CartanData: (d_i a_ij) not symmetric");
    }
};

// Weight in the basis of fundamental weights; coords[i] = (lambda, coroot_i).
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(int m) { return Weight(std::vector<int>(m, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }
    bool dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }
    friend Weight operator+(const Weight& x, const Weight& y) {
        Weight r = x;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& x, const Weight& y) {
        Weight r = x;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
        return r;
    }
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return coords < o.coords; }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
        os << "]";
        return os.str();
    }
};

namespace detail {
// inverse of an integer matrix over Q (small ranks only)
inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        Rational p = m[col][col];
        for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}
}  // namespace detail

inline CartanData make_cartan(std::vector<std::vector<int>> a, std::vector<int> d, int N) {
    CartanData cd;
    cd.m = static_cast<int>(a.size());
    cd.a = std::move(a);
    cd.d = std::move(d);
    cd.N = N;
    cd.validate();
    auto ainv = detail::invert(cd.a);
    cd.gram.assign(cd.m, std::vector<Rational>(cd.m));
    for (int i = 0; i < cd.m; ++i)
        for (int j = 0; j < cd.m; ++j) cd.gram[i][j] = ainv[j][i] * cd.d[j];
    // D = lcm of denominators of the Gram matrix
    Integer D = 1;
    for (auto& row : cd.gram)
        for (auto& g : row) D = lcm(D, denominator(g));
    cd.D = static_cast<int>(D);
    return cd;
}

inline const CartanData& sl2_data() {
    static const CartanData cd = make_cartan({{2}}, {1}, 1);
    return cd;
}

inline Rational inner(const Weight& x, const Weight& y, const CartanData& cd) {
    if (x.rank() != cd.m || y.rank() != cd.m) throw std::invalid_argument("inner: rank mismatch");
    Rational s = 0;
    for (int i = 0; i < cd.m; ++i)
        for (int j = 0; j < cd.m; ++j)
            if (x.coords[i] != 0 && y.coords[j] != 0) s += Rational(x.coords[i]) * y.coords[j] * cd.gram[i][j];
    return s;
}

inline Weight fundamental(const CartanData& cd, int i) {
    Weight w = Weight::zero(cd.m);
    w.coords[i] = 1;
    return w;
}

inline Weight simple_root(const CartanData& cd, int i) {
    // alpha_i = sum_j a_ji w_j  (coords of alpha_i are the i-th column of A)
    Weight w = Weight::zero(cd.m);
    for (int j = 0; j < cd.m; ++j) w.coords[j] = cd.a[j][i];
    return w;
}

inline Weight rho(const CartanData& cd) { return Weight(std::vector<int>(cd.m, 1)); }

// Tail-first lexicographic partial order on [Lambda]: pairs of lists
// ([mu],[lambda]) with mu_i dominant. Compares from the last leg; at each
// leg first the mu-difference must be dominant (nonzero to decide), then the
// lambda-difference; at the first leg a dominant (possibly zero)
// lambda-difference suffices, making the relation reflexive.
inline bool dominance_leq(const std::pair<std::vector<Weight>, std::vector<Weight>>& p1,
                          const std::pair<std::vector<Weight>, std::vector<Weight>>& p2) {
    const auto& [mu1, la1] = p1;
    const auto& [mu2, la2] = p2;
    size_t n = mu1.size();
    if (mu2.size() != n || la1.size() != n || la2.size() != n)
        throw std::invalid_argument("dominance_leq: length mismatch");
    for (size_t k = n; k-- > 0;) {
        Weight dmu = mu2[k] - mu1[k];
        if (!dmu.is_zero()) return dmu.dominant();
        Weight dla = la2[k] - la1[k];
        if (k == 0) return dla.dominant();
        if (!dla.is_zero()) return dla.dominant();
    }
    return true;
}

}  // namespace qmod
