#pragma once

#include "qmod/laurent.hpp"

#include <stdexcept>

namespace qmod {

enum class QVariant { bracket, paren };

// [p]_q = (q^p - q^{-p})/(q - q^{-1})   (symmetric)
// (p)_q = (q^p - 1)/(q - 1)             (one-sided)
inline Laurent qint(int p, QVariant v = QVariant::bracket) {
    if (p < 0) throw std::invalid_argument("qint: p must be >= 0");
    LaurentPoly s;
    for (int i = 0; i < p; ++i) {
        if (v == QVariant::bracket) {
            s.add_term(4 * (p - 1 - 2 * i), Rational(1));  // q^{p-1}, q^{p-3}, ..., q^{1-p}
        } else {
            s.add_term(4 * i, Rational(1));  // 1 + q + ... + q^{p-1}
        }
    }
    return Laurent(s);
}

inline Laurent qfact(int p, QVariant v = QVariant::bracket) {
    Laurent r(1);
    for (int i = 1; i <= p; ++i) r *= qint(i, v);
    return r;
}

inline Laurent qbinom(int p, int k, QVariant v = QVariant::bracket) {
    if (k < 0 || k > p) throw std::invalid_argument("qbinom: need 0 <= k <= p");
    Laurent r = qfact(p, v) / (qfact(p - k, v) * qfact(k, v));
    if (!r.is_polynomial()) throw std::logic_error("qbinom: division not exact");
    return r;
}

// (n)_q! evaluated at q^{-1}; denominator of the n-th term of e_{q^{-1}}(z)
inline Laurent qfact_paren_qinv(int n) {
    Laurent r(1);
    for (int i = 1; i <= n; ++i) {
        LaurentPoly s;
        for (int j = 0; j < i; ++j) s.add_term(-4 * j, Rational(1));
        r *= Laurent(s);
    }
    return r;
}

}  // namespace qmod
