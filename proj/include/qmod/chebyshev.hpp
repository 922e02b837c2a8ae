#pragma once

#include "qmod/rational.hpp"

#include <vector>

namespace qmod {

// T_k with T_k(2cos t) = 2cos(kt): T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
// (T_k(x)/2 is the k-th Chebyshev polynomial of the first kind in x/2.)
class ChebyPoly {
   public:
    explicit ChebyPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Integer>& coeffs() const { return coeffs_; }  // coeff of x^i at index i

    // evaluate in any commutative ring element with int scaling
    template <typename T>
    T eval(const T& x, const T& one) const {
        T acc = one - one;  // zero
        T p = one;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) acc += p * scale(one, coeffs_[i]);
            if (i + 1 < coeffs_.size()) p *= x;
        }
        return acc;
    }

   private:
    template <typename T>
    static T scale(const T& one, const Integer& n) {
        T r = one - one;
        Integer k = n < 0 ? Integer(-n) : n;
        for (Integer i = 0; i < k; ++i) r += one;
        if (n < 0) r = (one - one) - r;
        return r;
    }

    std::vector<Integer> coeffs_;
};

inline ChebyPoly chebyshev_t(int k) {
    std::vector<Integer> prev{2}, cur{0, 1};  // T_0 = 2, T_1 = x
    if (k == 0) return ChebyPoly(prev);
    for (int i = 1; i < k; ++i) {
        std::vector<Integer> next(cur.size() + 1, Integer(0));
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ChebyPoly(cur);
}

}  // namespace qmod
