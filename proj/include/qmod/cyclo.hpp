#pragma once

#include "qmod/laurent.hpp"
#include "qmod/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmod {

namespace detail {

// dense polynomial over Q, coefficient of x^i at index i
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_trim(r);
    return r;
}

// exact division, throws on nonzero remainder
inline QPoly qpoly_div(QPoly a, const QPoly& b) {
    QPoly q(a.size(), Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qpoly_trim(a);
    }
    if (!a.empty()) throw std::domain_error("qpoly_div: inexact division");
    qpoly_trim(q);
    return q;
}

// l-th cyclotomic polynomial via x^l - 1 = prod_{d|l} Phi_d
inline QPoly cyclotomic(int l) {
    QPoly xl1(l + 1, Rational(0));
    xl1[0] = -1;
    xl1[l] = 1;
    QPoly acc{Rational(1)};
    for (int d = 1; d < l; ++d)
        if (l % d == 0) acc = qpoly_mul(acc, cyclotomic(d));
    return qpoly_div(xl1, acc);
}

}  // namespace detail

// The cyclotomic field Q(eps) = Q[x]/Phi_l(x), eps a primitive l-th root of
// unity, l odd. q specializes to x; q^{1/2} to x^{(l+1)/2}; since 4 is
// invertible mod l the whole quarter lattice specializes, q^{e/4} -> x^{e*inv4}.
class CycloField {
   public:
    explicit CycloField(int l) : l_(l), phi_(detail::cyclotomic(l)) {
        if (l < 3 || l % 2 == 0) throw std::invalid_argument("CycloField: l must be odd and >= 3");
        deg_ = static_cast<int>(phi_.size()) - 1;
        int half = (l + 1) / 2;
        inv4_ = (half * half) % l;
        // reduction table for x^k, k = deg .. 2deg-2
        detail::QPoly xk(deg_ + 1, Rational(0));
        for (int i = 0; i < deg_; ++i) xk[i] = -phi_[i];  // x^deg = -(lower part), phi monic
        xpow_.push_back(xk);
        xpow_.back().resize(deg_, Rational(0));
        for (int k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
            detail::QPoly next(deg_, Rational(0));
            const detail::QPoly& prev = xpow_.back();
            // multiply prev by x, reduce
            Rational top = deg_ > 0 ? prev[deg_ - 1] : Rational(0);
            for (int i = deg_ - 1; i > 0; --i) next[i] = prev[i - 1];
            next[0] = 0;
            if (top != 0)
                for (int i = 0; i < deg_; ++i) next[i] += top * xpow_[0][i];
            xpow_.push_back(next);
        }
    }

    int l() const { return l_; }
    int degree() const { return deg_; }
    int inv4() const { return inv4_; }
    const detail::QPoly& phi() const { return phi_; }
    // x^k mod Phi_l for k >= deg, k <= 2deg-2
    const detail::QPoly& xpow(int k) const { return xpow_.at(k - deg_); }

    static std::shared_ptr<const CycloField> get(int l) {
        static std::map<int, std::shared_ptr<const CycloField>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
        auto f = std::make_shared<const CycloField>(l);
        cache[l] = f;
        return f;
    }

   private:
    int l_, deg_, inv4_;
    detail::QPoly phi_;
    std::vector<detail::QPoly> xpow_;
};

class Cyclo {
   public:
    Cyclo() : field_(nullptr) {}
    Cyclo(int n) : field_(nullptr) { int_ = Rational(n); }
    Cyclo(const Rational& c) : field_(nullptr) { int_ = c; }
    Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs)
        : field_(std::move(f)), coeffs_(std::move(coeffs)) {
        coeffs_.resize(field_->degree(), Rational(0));
    }

    static Cyclo eps_power(const std::shared_ptr<const CycloField>& f, long long k) {
        std::vector<Rational> c(f->degree(), Rational(0));
        long long kk = ((k % f->l()) + f->l()) % f->l();
        Cyclo r(f, std::move(c));
        // x^kk reduced
        if (kk < f->degree()) {
            r.coeffs_[static_cast<size_t>(kk)] = 1;
        } else {
            const auto& p = f->xpow(static_cast<int>(kk));
            for (int i = 0; i < f->degree(); ++i) r.coeffs_[i] = i < (int)p.size() ? p[i] : Rational(0);
        }
        return r;
    }

    // q^{e/4} -> x^{e * inv4 mod l}
    static Cyclo q_quarter(const std::shared_ptr<const CycloField>& f, long long e_quarter,
                           const Rational& c = Rational(1)) {
        Cyclo r = eps_power(f, e_quarter * f->inv4());
        return r.scaled(c);
    }

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    bool is_rational() const { return field_ == nullptr; }

    bool is_zero() const {
        if (is_rational()) return int_ == 0;
        for (auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (is_rational()) return int_ == 1;
        if (coeffs_.empty() || coeffs_[0] != 1) return false;
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Cyclo scaled(const Rational& s) const {
        Cyclo r = *this;
        if (r.is_rational()) {
            r.int_ *= s;
        } else {
            for (auto& c : r.coeffs_) c *= s;
        }
        return r;
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = Cyclo::aligned(a, b);
        if (x.is_rational()) return Cyclo(x.int_ + y.int_);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = Cyclo::aligned(a, b);
        if (x.is_rational()) return Cyclo(x.int_ - y.int_);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    Cyclo operator-() const { return scaled(Rational(-1)); }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = Cyclo::aligned(a, b);
        if (x.is_rational()) return Cyclo(x.int_ * y.int_);
        const auto& f = x.field_;
        int d = f->degree();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (int i = 0; i < d; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (y.coeffs_[j] == 0) continue;
                prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        std::vector<Rational> red(d, Rational(0));
        for (int k = 0; k < (int)prod.size(); ++k) {
            if (prod[k] == 0) continue;
            if (k < d) {
                red[k] += prod[k];
            } else {
                const auto& p = f->xpow(k);
                for (int i = 0; i < d && i < (int)p.size(); ++i) red[i] += prod[k] * p[i];
            }
        }
        return Cyclo(f, std::move(red));
    }
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // field inverse by extended Euclid in Q[x] against Phi_l
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
        if (is_rational()) return Cyclo(Rational(1) / int_);
        detail::QPoly a = field_->phi();
        detail::QPoly b(coeffs_.begin(), coeffs_.end());
        detail::qpoly_trim(b);
        // extended euclid: s*a + t*b = g
        detail::QPoly t0{}, t1{Rational(1)};
        while (!b.empty()) {
            // divide a by b
            detail::QPoly q(a.size(), Rational(0)), r = a;
            while (r.size() >= b.size() && !r.empty()) {
                Rational f = r.back() / b.back();
                size_t sh = r.size() - b.size();
                q[sh] += f;
                for (size_t i = 0; i < b.size(); ++i) r[sh + i] -= f * b[i];
                detail::qpoly_trim(r);
            }
            detail::qpoly_trim(q);
            a = b;
            b = r;
            detail::QPoly tn = t0;  // t0 - q*t1
            detail::QPoly qt = detail::qpoly_mul(q, t1);
            tn.resize(std::max(tn.size(), qt.size()), Rational(0));
            for (size_t i = 0; i < qt.size(); ++i) tn[i] -= qt[i];
            detail::qpoly_trim(tn);
            t0 = t1;
            t1 = tn;
        }
        // a = gcd (constant, since Phi_l irreducible and b nonzero mod Phi_l)
        if (a.size() != 1) throw std::domain_error("Cyclo: element not invertible (gcd not constant)");
        Rational g = a[0];
        std::vector<Rational> res(field_->degree(), Rational(0));
        for (size_t i = 0; i < t0.size() && i < res.size(); ++i) res[i] = t0[i] / g;
        return Cyclo(field_, std::move(res));
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

    bool operator==(const Cyclo& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    std::string str() const {
        if (is_rational()) return to_string(int_);
        std::ostringstream os;
        bool first = true;
        for (int i = (int)coeffs_.size() - 1; i >= 0; --i) {
            if (coeffs_[i] == 0) continue;
            Rational c = coeffs_[i];
            if (!first) {
                os << (c > 0 ? " + " : " - ");
                if (c < 0) c = -c;
            } else {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
                first = false;
            }
            if (i == 0) {
                os << to_string(c);
            } else {
                if (c != 1) os << to_string(c) << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) return "0";
        return os.str();
    }

   private:
    // lift rationals into a common field
    static std::pair<Cyclo, Cyclo> aligned(const Cyclo& a, const Cyclo& b) {
        if (a.is_rational() && b.is_rational()) return {a, b};
        const auto& f = a.is_rational() ? b.field_ : a.field_;
        if (!a.is_rational() && !b.is_rational() && a.field_->l() != b.field_->l())
            throw std::invalid_argument("Cyclo: mixed cyclotomic fields");
        auto lift = [&](const Cyclo& x) {
            if (!x.is_rational()) return x;
            std::vector<Rational> c(f->degree(), Rational(0));
            c[0] = x.int_;
            return Cyclo(f, std::move(c));
        };
        return {lift(a), lift(b)};
    }

    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> coeffs_;
    Rational int_ = 0;  // value when field_ == nullptr
};

// Ring homomorphism A[q^{1/4}] localized -> Q(eps); rejects elements whose
// denominator vanishes at eps.
inline Cyclo specialize(const Laurent& s, const std::shared_ptr<const CycloField>& f) {
    auto map_poly = [&](const LaurentPoly& p) {
        Cyclo acc(f, std::vector<Rational>(f->degree(), Rational(0)));
        for (auto& [e, c] : p.terms()) acc += Cyclo::q_quarter(f, e, c);
        return acc;
    };
    Cyclo n = map_poly(s.num());
    if (s.is_polynomial()) return n;
    Cyclo d = map_poly(s.den());
    if (d.is_zero()) throw std::domain_error("specialize: denominator vanishes at root of unity");
    return n / d;
}

inline Cyclo specialize(const Laurent& s, int l) { return specialize(s, CycloField::get(l)); }

}  // namespace qmod
