#pragma once

#include "qmod/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmod {

// Sparse Laurent polynomial in y = q^{1/4} with rational coefficients.
// Exponents are kept in quarter units of q so that the half-integer lattice
// of the algebra layers and the q^{-H^2/4} factor of the quantum Weyl group
// live in one monoid. No zero coefficient is ever stored.
class LaurentPoly {
   public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    static LaurentPoly q_power_quarter(int e, const Rational& c = Rational(1)) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    // lowest / highest exponent in quarter units; requires nonzero
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    const Rational& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(int e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    LaurentPoly shifted(int dq) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e + dq] = c;
        return r;
    }
    LaurentPoly scaled(const Rational& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Exact Euclidean division by a nonzero divisor; remainder returned.
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        LaurentPoly quot, rem = a;
        const int bdeg = b.max_exp() - b.min_exp();
        while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= bdeg) {
            int shift = rem.max_exp() - b.max_exp();
            Rational f = rem.leading_coeff() / b.leading_coeff();
            quot.add_term(shift, f);
            rem = rem - b.shifted(shift).scaled(f);
        }
        return {quot, rem};
    }

    std::string str() const;

   private:
    Terms terms_;
};

// gcd of two Laurent polynomials, normalized monic with min exponent 0.
inline LaurentPoly laurent_gcd(LaurentPoly a, LaurentPoly b) {
    auto normalize = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        return p.shifted(-p.min_exp()).scaled(Rational(1) / p.leading_coeff());
    };
    a = normalize(a);
    b = normalize(b);
    while (!b.is_zero()) {
        auto [q, r] = LaurentPoly::divmod(a, b);
        (void)q;
        a = b;
        b = normalize(r);
    }
    return normalize(a);
}

// Scalar of the engine: element of the fraction field Q(q^{1/4}), canonically
// reduced (den monic, min exponent 0, coprime to num). Values arising from
// the algebras themselves are polynomial; fractions appear in Drinfeld
// pairings and in exact linear algebra.
class Laurent {
   public:
    Laurent() : num_(), den_(Rational(1)) {}
    Laurent(int n) : num_(Rational(n)), den_(Rational(1)) {}
    Laurent(const Rational& c) : num_(c), den_(Rational(1)) {}
    Laurent(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit Laurent(LaurentPoly n) : num_(std::move(n)), den_(Rational(1)) {}

    // q^{e/2}: half-integer exponent interface used by the algebra layers
    static Laurent q_half(int e_half, const Rational& c = Rational(1)) {
        return Laurent(LaurentPoly::q_power_quarter(2 * e_half, c));
    }
    static Laurent q_int(int e, const Rational& c = Rational(1)) { return q_half(2 * e, c); }
    static Laurent q_quarter(int e_quarter, const Rational& c = Rational(1)) {
        return Laurent(LaurentPoly::q_power_quarter(e_quarter, c));
    }
    static Laurent q_minus_qinv() { return q_int(1) - q_int(-1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.den_ == b.den_) return Laurent(a.num_ + b.num_, a.den_);
        return Laurent(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        if (a.den_ == b.den_) return Laurent(a.num_ - b.num_, a.den_);
        return Laurent(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Laurent operator-() const {
        Laurent r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        return Laurent(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Laurent operator/(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("Laurent: division by zero");
        if (a.is_zero()) return Laurent();
        return Laurent(a.num_ * b.den_, a.den_ * b.num_);
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator/=(const Laurent& o) { return *this = *this / o; }

    Laurent inverse() const {
        if (is_zero()) throw std::domain_error("Laurent: inverse of zero");
        return Laurent(den_, num_);
    }

    bool operator==(const Laurent& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Substitute q -> 1/q (used by Lusztig-type symmetries and sanity tests).
    Laurent bar() const {
        auto flip = [](const LaurentPoly& p) {
            LaurentPoly r;
            for (auto& [e, c] : p.terms()) r.add_term(-e, c);
            return r;
        };
        return Laurent(flip(num_), flip(den_));
    }

    std::string str() const;

   private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Laurent: zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        if (!den_.is_one()) {
            LaurentPoly g = laurent_gcd(num_, den_);
            if (!(g.max_exp() == 0 && g.is_one())) {
                num_ = LaurentPoly::divmod(num_, g).first;
                den_ = LaurentPoly::divmod(den_, g).first;
            }
            // normalize: den monic with min exponent 0
            Rational lc = den_.leading_coeff();
            int sh = den_.min_exp();
            den_ = den_.shifted(-sh).scaled(Rational(1) / lc);
            num_ = num_.shifted(-sh).scaled(Rational(1) / lc);
        }
    }

    LaurentPoly num_, den_;
};

// --- printing -------------------------------------------------------------
// Canonical textual form: sum of c*q^e terms, exponents descending, exact
// rationals. Half-integer exponents print as q^(k/2).

inline std::string exponent_str(int quarter) {
    std::ostringstream os;
    if (quarter % 4 == 0) {
        os << quarter / 4;
    } else if (quarter % 2 == 0) {
        os << "(" << quarter / 2 << "/2)";
    } else {
        os << "(" << quarter << "/4)";
    }
    return os.str();
}

inline std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
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
        int e = it->first;
        if (e == 0) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << "q^" << exponent_str(e);
        }
    }
    return os.str();
}

inline std::string Laurent::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

}  // namespace qmod
