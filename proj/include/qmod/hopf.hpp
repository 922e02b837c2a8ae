#pragma once

#include "qmod/presentations.hpp"
#include "qmod/qcomb.hpp"

#include <cstdint>
#include <shared_mutex>

namespace qmod {

using Elt = AlgebraElement<Laurent>;

// ---------------------------------------------------------------------------
// Representations of U_q words on V_2^{otimes r}.
//
// Basis vectors are encoded as r-bit multi-indices (bit t = index of leg t,
// leg 0 leftmost); v_0 has H-weight +1, v_1 has -1. Words act through the
// iterated coproduct: E -> sum_i 1^(i-1) x E x K^(r-i), F -> sum_i
// K^{-1(i-1)} x F x 1^(r-i), L -> L^(r). Only sparse columns are ever formed.
// ---------------------------------------------------------------------------

using RepVec = std::map<uint32_t, Laurent>;

inline int bit_of(uint32_t idx, int t) { return (idx >> t) & 1u; }
inline int hweight_leg(uint32_t idx, int t) { return 1 - 2 * bit_of(idx, t); }
inline int hweight_total(uint32_t idx, int r) {
    int s = 0;
    for (int t = 0; t < r; ++t) s += hweight_leg(idx, t);
    return s;
}

namespace detail {

inline void rep_add(RepVec& v, uint32_t idx, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = v.find(idx);
    if (it == v.end()) {
        v.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline RepVec rep_apply_factor(int gen, int exp, const RepVec& v, int r, bool transposed) {
    if (gen == uqgen::L) {
        RepVec out;
        for (auto& [idx, c] : v) rep_add(out, idx, c * Laurent::q_half(exp * hweight_total(idx, r)));
        return out;
    }
    // E lowers the leg index 1 -> 0 (raises weight); transposed E raises it.
    // F raises the leg index 0 -> 1; transposed F lowers it.
    bool flip_to_zero = transposed ? (gen == uqgen::F) : (gen == uqgen::E);
    bool cartan_right = (gen == uqgen::E);  // K-factors sit to the right of E, K^{-1} left of F
    RepVec cur = v;
    for (int step = 0; step < exp; ++step) {
        RepVec out;
        for (auto& [idx, c] : cur) {
            for (int i = 0; i < r; ++i) {
                if (bit_of(idx, i) != (flip_to_zero ? 1 : 0)) continue;
                int wsum = 0;
                if (cartan_right) {
                    for (int t = i + 1; t < r; ++t) wsum += hweight_leg(idx, t);
                } else {
                    for (int t = 0; t < i; ++t) wsum -= hweight_leg(idx, t);
                }
                uint32_t nidx = idx ^ (1u << i);
                rep_add(out, nidx, c * Laurent::q_int(wsum));
            }
        }
        cur = std::move(out);
        if (cur.empty()) break;
    }
    return cur;
}

}  // namespace detail

// apply a U_q PBW word to a sparse vector; exponents of E, F must be >= 0
inline RepVec rep_apply_word(const NCWord& w, RepVec v, int r, bool transposed = false) {
    if (transposed) {
        for (auto& [g, e] : w.factors) v = detail::rep_apply_factor(g, e, v, r, true);
    } else {
        for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
            v = detail::rep_apply_factor(it->first, it->second, v, r, false);
    }
    return v;
}

// ---------------------------------------------------------------------------
// O_q words as matrix coefficients: letter (i,j) bits; a=(0,0), b=(0,1),
// c=(1,0), d=(1,1).
// ---------------------------------------------------------------------------

struct OWordBits {
    uint32_t rows = 0, cols = 0;
    int len = 0;
};

inline OWordBits oword_bits(const NCWord& w) {
    OWordBits ob;
    for (auto& [g, e] : w.factors) {
        for (int k = 0; k < e; ++k) {
            int i = (g == ogen::c || g == ogen::d) ? 1 : 0;
            int j = (g == ogen::b || g == ogen::d) ? 1 : 0;
            ob.rows |= uint32_t(i) << ob.len;
            ob.cols |= uint32_t(j) << ob.len;
            ++ob.len;
        }
    }
    return ob;
}

inline int oletter(int rowbit, int colbit) {
    return rowbit ? (colbit ? ogen::d : ogen::c) : (colbit ? ogen::b : ogen::a);
}

inline NCWord oword_from_bits(uint32_t rows, uint32_t cols, int len) {
    NCWord w;
    for (int t = 0; t < len; ++t) w.append(oletter(bit_of(rows, t), bit_of(cols, t)), 1);
    return w;
}

// ---------------------------------------------------------------------------
// Evaluation pairing  < O_q , U_q >
// ---------------------------------------------------------------------------

struct NCWordKeyLess {
    bool operator()(const NCWord& a, const NCWord& b) const { return a.factors < b.factors; }
};

struct PairKeyLess {
    bool operator()(const std::pair<NCWord, NCWord>& x, const std::pair<NCWord, NCWord>& y) const {
        if (NCWordKeyLess{}(x.first, y.first)) return true;
        if (NCWordKeyLess{}(y.first, x.first)) return false;
        return NCWordKeyLess{}(x.second, y.second);
    }
};

// <phi^I_J, x> = (pi(x))_{I,J} on V_2^{otimes len}; memoized, safe for
// concurrent reads with serialized inserts
class PairingTable {
   public:
    Laurent pair_words(const NCWord& ow, const NCWord& uw) const {
        {
            std::shared_lock lock(mtx_);
            auto it = memo_.find({ow, uw});
            if (it != memo_.end()) return it->second;
        }
        OWordBits ob = oword_bits(ow);
        RepVec v{{ob.cols, Laurent(1)}};
        v = rep_apply_word(uw, std::move(v), ob.len);
        Laurent r;
        if (auto it = v.find(ob.rows); it != v.end()) r = it->second;
        std::unique_lock lock(mtx_);
        memo_.emplace(std::make_pair(ow, uw), r);
        return r;
    }

   private:
    mutable std::map<std::pair<NCWord, NCWord>, Laurent, PairKeyLess> memo_;
    mutable std::shared_mutex mtx_;
};

inline PairingTable& pairing_table() {
    static PairingTable t;
    return t;
}

inline Laurent pair(const Elt& alpha, const Elt& x) {
    Laurent s;
    for (auto& [ow, oc] : alpha.terms())
        for (auto& [uw, uc] : x.terms()) {
            Laurent p = pairing_table().pair_words(ow, uw);
            if (!p.is_zero()) s += oc * uc * p;
        }
    return s;
}

// ---------------------------------------------------------------------------
// Counits and antipodes
// ---------------------------------------------------------------------------

inline Laurent counit_u(const Elt& x) {
    Laurent s;
    for (auto& [w, c] : x.terms()) {
        bool diag = true;
        for (auto& [g, e] : w.factors) diag &= (g == uqgen::L);
        if (diag) s += c;
    }
    return s;
}

inline Laurent counit_o(const Elt& a) {
    Laurent s;
    for (auto& [w, c] : a.terms()) {
        bool diag = true;
        for (auto& [g, e] : w.factors) diag &= (g == ogen::a || g == ogen::d);
        if (diag) s += c;
    }
    return s;
}

namespace detail {
// anti-automorphism from generator images: word g1..gk -> img(gk)...img(g1)
inline Elt antihom(const Elt& x, const std::vector<Elt>& img_pos, const std::vector<Elt>& img_neg) {
    const auto* p = img_pos[0].pres();
    Elt out(p);
    for (auto& [w, c] : x.terms()) {
        Elt acc = Elt::unit(p);
        for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
            auto [g, e] = *it;
            const Elt& im = e >= 0 ? img_pos[g] : img_neg[g];
            int k = e >= 0 ? e : -e;
            for (int s = 0; s < k; ++s) acc = acc * im;
        }
        out += acc.scaled(c);
    }
    return out;
}
}  // namespace detail

// S(E) = -EK^{-1}, S(F) = -KF, S(L) = L^{-1}
inline Elt antipode_u(const Elt& x) {
    const auto& p = *x.pres();
    Elt sE = Elt::monomial(&p, detail::w({{uqgen::E, 1}, {uqgen::L, -2}}), Laurent(-1));
    Elt sF = Elt::monomial(&p, detail::w({{uqgen::L, 2}, {uqgen::F, 1}}), Laurent(-1));
    Elt sL = gen_elt(p, uqgen::L, -1);
    Elt sLinv = gen_elt(p, uqgen::L, 1);
    return detail::antihom(x, {sF, sL, sE}, {sF, sLinv, sE});
}

// S^{-1}(E) = -K^{-1}E, S^{-1}(F) = -FK, S^{-1}(L) = L^{-1}
inline Elt antipode_u_inv(const Elt& x) {
    const auto& p = *x.pres();
    Elt sE = Elt::monomial(&p, detail::w({{uqgen::L, -2}, {uqgen::E, 1}}), Laurent(-1));
    Elt sF = Elt::monomial(&p, detail::w({{uqgen::F, 1}, {uqgen::L, 2}}), Laurent(-1));
    Elt sL = gen_elt(p, uqgen::L, -1);
    Elt sLinv = gen_elt(p, uqgen::L, 1);
    return detail::antihom(x, {sF, sL, sE}, {sF, sLinv, sE});
}

// dual antipode on O_q: S(a)=d, S(b)=-qb, S(c)=-q^{-1}c, S(d)=a
inline Elt antipode_o(const Elt& x) {
    const auto& p = *x.pres();
    using namespace ogen;
    std::vector<Elt> img{gen_elt(p, d), gen_elt(p, b).scaled(-Laurent::q_int(1)),
                         gen_elt(p, c).scaled(-Laurent::q_int(-1)), gen_elt(p, a)};
    return detail::antihom(x, img, img);
}

inline Elt antipode_o_inv(const Elt& x) {
    const auto& p = *x.pres();
    using namespace ogen;
    std::vector<Elt> img{gen_elt(p, d), gen_elt(p, b).scaled(-Laurent::q_int(-1)),
                         gen_elt(p, c).scaled(-Laurent::q_int(1)), gen_elt(p, a)};
    return detail::antihom(x, img, img);
}

// ---------------------------------------------------------------------------
// Tensor squares and coproducts
// ---------------------------------------------------------------------------

// element of A (x) A with both legs kept in normal form
class TensorSquare {
   public:
    using Terms = std::map<std::pair<NCWord, NCWord>, Laurent, PairKeyLess>;

    explicit TensorSquare(const Presentation<Laurent>* p = nullptr) : pres_(p) {}
    static TensorSquare unit(const Presentation<Laurent>* p) {
        TensorSquare t(p);
        t.add(NCWord{}, NCWord{}, Laurent(1));
        return t;
    }

    const Presentation<Laurent>* pres() const { return pres_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const NCWord& w1, const NCWord& w2, const Laurent& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(w1, w2);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorSquare operator+(const TensorSquare& x, const TensorSquare& y) {
        TensorSquare r = x;
        for (auto& [k, c] : y.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend TensorSquare operator-(const TensorSquare& x, const TensorSquare& y) {
        TensorSquare r = x;
        for (auto& [k, c] : y.terms_) r.add(k.first, k.second, -c);
        return r;
    }
    TensorSquare scaled(const Laurent& s) const {
        TensorSquare r(pres_);
        for (auto& [k, c] : terms_) r.add(k.first, k.second, c * s);
        return r;
    }

    // componentwise product, each leg reduced in the presentation
    friend TensorSquare operator*(const TensorSquare& x, const TensorSquare& y) {
        TensorSquare r(x.pres_);
        for (auto& [kx, cx] : x.terms_)
            for (auto& [ky, cy] : y.terms_) {
                Elt l1 = Elt::monomial(x.pres_, kx.first * ky.first, Laurent(1));
                Elt l2 = Elt::monomial(x.pres_, kx.second * ky.second, Laurent(1));
                for (auto& [w1, c1] : l1.terms())
                    for (auto& [w2, c2] : l2.terms()) r.add(w1, w2, cx * cy * c1 * c2);
            }
        return r;
    }

    bool operator==(const TensorSquare& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorSquare& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        Elt probe(pres_);
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*" << probe.word_str(k.first) << " (x) " << probe.word_str(k.second);
        }
        return os.str();
    }

   private:
    const Presentation<Laurent>* pres_;
    Terms terms_;
};

// Delta on U_q: Delta(E)=E(x)K+1(x)E, Delta(F)=K^{-1}(x)F+F(x)1, Delta(L)=L(x)L
inline TensorSquare coproduct_u(const Elt& x) {
    const auto* p = x.pres();
    auto gen_cop = [&](int g, int e) {
        TensorSquare t(p);
        if (g == uqgen::L) {
            t.add(NCWord::gen(uqgen::L, e), NCWord::gen(uqgen::L, e), Laurent(1));
            return t;
        }
        TensorSquare base(p);
        if (g == uqgen::E) {
            base.add(NCWord::gen(uqgen::E), NCWord::gen(uqgen::L, 2), Laurent(1));
            base.add(NCWord{}, NCWord::gen(uqgen::E), Laurent(1));
        } else {
            base.add(NCWord::gen(uqgen::L, -2), NCWord::gen(uqgen::F), Laurent(1));
            base.add(NCWord::gen(uqgen::F), NCWord{}, Laurent(1));
        }
        t = TensorSquare::unit(p);
        for (int i = 0; i < e; ++i) t = t * base;
        return t;
    };
    TensorSquare out(p);
    for (auto& [w, c] : x.terms()) {
        TensorSquare acc = TensorSquare::unit(p);
        for (auto& [g, e] : w.factors) acc = acc * gen_cop(g, e);
        out = out + acc.scaled(c);
    }
    return out;
}

// matrix coproduct on O_q-shaped words: Delta phi^i_j = sum_k phi^i_k (x) phi^k_j
inline TensorSquare coproduct_o(const Elt& x) {
    const auto* p = x.pres();
    TensorSquare out(p);
    for (auto& [w, c] : x.terms()) {
        OWordBits ob = oword_bits(w);
        for (uint32_t mid = 0; mid < (1u << ob.len); ++mid) {
            Elt l1 = Elt::monomial(p, oword_from_bits(ob.rows, mid, ob.len), Laurent(1));
            Elt l2 = Elt::monomial(p, oword_from_bits(mid, ob.cols, ob.len), Laurent(1));
            for (auto& [w1, c1] : l1.terms())
                for (auto& [w2, c2] : l2.terms()) out.add(w1, w2, c * c1 * c2);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coregular and coadjoint actions
// ---------------------------------------------------------------------------

enum class Side { left, right };  // left: x |> alpha,  right: alpha <| x

// x |> phi^I_J = sum_K pi(x)_{K,J} phi^I_K ; phi^I_J <| x = sum_K pi(x)_{I,K} phi^K_J.
// Reduction happens in the element's own presentation (the normal-form word
// bases of O_q and L_{0,1} coincide).
inline Elt coregular(const Elt& x, const Elt& alpha, Side side) {
    const auto* p = alpha.pres();
    Elt out(p);
    long budget = rewrite_step_budget();
    typename Elt::TermMap acc(p->less());
    for (auto& [ow, oc] : alpha.terms()) {
        OWordBits ob = oword_bits(ow);
        for (auto& [uw, uc] : x.terms()) {
            if (side == Side::left) {
                RepVec v{{ob.cols, Laurent(1)}};
                v = rep_apply_word(uw, std::move(v), ob.len, false);
                for (auto& [k, cv] : v)
                    p->reduce_into(acc, oword_from_bits(ob.rows, k, ob.len), oc * uc * cv, budget);
            } else {
                RepVec v{{ob.rows, Laurent(1)}};
                v = rep_apply_word(uw, std::move(v), ob.len, true);
                for (auto& [k, cv] : v)
                    p->reduce_into(acc, oword_from_bits(k, ob.cols, ob.len), oc * uc * cv, budget);
            }
        }
    }
    for (auto& [w, c] : acc) out.add_term(w, c);
    return out;
}

// coad^r(x)(alpha) = sum S(x_(2)) |> alpha <| x_(1)
inline Elt coadjoint(const Elt& x, const Elt& alpha) {
    const auto* up = x.pres();
    TensorSquare dx = coproduct_u(x);
    Elt out(alpha.pres());
    for (auto& [k, c] : dx.terms()) {
        Elt x1 = Elt::monomial(up, k.first, Laurent(1));
        Elt x2s = antipode_u(Elt::monomial(up, k.second, Laurent(1)));
        out += coregular(x2s, coregular(x1, alpha, Side::right), Side::left).scaled(c);
    }
    return out;
}

// ad^r(y)(x) = sum S(y_(1)) x y_(2) on U_q
inline Elt adjoint_r(const Elt& y, const Elt& x) {
    TensorSquare dy = coproduct_u(y);
    Elt out(x.pres());
    for (auto& [k, c] : dy.terms()) {
        Elt y1s = antipode_u(Elt::monomial(y.pres(), k.first, Laurent(1)));
        Elt y2 = Elt::monomial(y.pres(), k.second, Laurent(1));
        out += (y1s * x * y2).scaled(c);
    }
    return out;
}

// identity re-tagging along O_q = L_{0,1} as vector spaces (shared basis)
inline Elt retag(const Elt& e, const Presentation<Laurent>& target) {
    Elt out(&target);
    for (auto& [w, c] : e.terms()) out.add_term(w, c);
    return out;
}

// ---------------------------------------------------------------------------
// Drinfeld pairing tau : U_q(b_+)^{cop} (x) U_q(b_-) -> C(q^{1/D})
// tau(K_la, K_mu) = q^{-(la,mu)}, tau(E,F) = -1/(q-q^{-1}), mixed zero.
// First argument words in {E, L^{+-1}}, second in {F, L^{+-1}}.
// ---------------------------------------------------------------------------

inline bool in_borel_plus(const Elt& x) {
    for (auto& [w, c] : x.terms())
        for (auto& [g, e] : w.factors)
            if (g == uqgen::F) return false;
    return true;
}
inline bool in_borel_minus(const Elt& x) {
    for (auto& [w, c] : x.terms())
        for (auto& [g, e] : w.factors)
            if (g == uqgen::E) return false;
    return true;
}

namespace detail {
// base pairing of E against a normal word F^a L^m
inline Laurent tau_E_word(const NCWord& w) {
    int a = 0;
    for (auto& [g, e] : w.factors)
        if (g == uqgen::F) a += e;
    if (a != 1) return Laurent();
    return -Laurent::q_minus_qinv().inverse();
}

inline Laurent tau_rec(const NCWord& x, const Elt& y) {
    // x in normal form L^m E^c viewed as a word over letters; peel from the left
    if (x.factors.empty()) {
        Laurent s;
        for (auto& [w, c] : y.terms()) {
            bool cartan = true;
            for (auto& [g, e] : w.factors) cartan &= (g == uqgen::L);
            if (cartan) s += c;
        }
        return s;
    }
    auto [g, e] = x.factors.front();
    NCWord rest = x;
    if (e > 1 || e < -1) {
        rest.factors.front().second -= (e > 0 ? 1 : -1);
    } else {
        rest.factors.erase(rest.factors.begin());
    }
    int sg = e > 0 ? 1 : -1;
    Laurent out;
    if (g == uqgen::L) {
        // tau(L^s v, y) = sum tau(L^s, y_(1)) tau(v, y_(2)): only the pure
        // Cartan leg of Delta(y) pairs with L^s. For y-word F^a L^m that leg
        // is K^{-a} L^m = L^{m-2a} paired with F^a L^m; the value is
        // tau(K_{s w}, K_{(m-2a) w}) = q^{-s(m-2a)(w,w)} = q^{-s(m-2a)/2}.
        for (auto& [w, c] : y.terms()) {
            int m = 0, a = 0;
            for (auto& [gg, ee] : w.factors) (gg == uqgen::L ? m : a) += ee;
            out += tau_rec(rest, Elt::monomial(y.pres(), w, c * Laurent::q_half(-sg * (m - 2 * a))));
        }
        return out;
    }
    // g == E: tau(E x', y) = sum tau(E, y_(1)) tau(x', y_(2))
    TensorSquare dy = coproduct_u(y);
    for (auto& [k, c] : dy.terms()) {
        Laurent base = tau_E_word(k.first);
        if (base.is_zero()) continue;
        out += base * c * tau_rec(rest, Elt::monomial(y.pres(), k.second, Laurent(1)));
    }
    return out;
}
}  // namespace detail

inline Laurent drinfeld_pair(const Elt& x, const Elt& y) {
    if (!in_borel_plus(x)) throw std::invalid_argument("drinfeld_pair: first argument not in U_q(b_+)");
    if (!in_borel_minus(y)) throw std::invalid_argument("drinfeld_pair: second argument not in U_q(b_-)");
    Laurent s;
    for (auto& [w, c] : x.terms()) s += c * detail::tau_rec(w, y);
    return s;
}

// ---------------------------------------------------------------------------
// Phi^{+-}: O_q -> U_q^{cop}, alpha -> (alpha (x) id)(R^{+-}), computed
// through R = Theta Rhat with Rhat = e_{q^{-1}}((q-q^{-1}) E (x) F) truncated
// by nilpotency, Theta acting by the weight pairing.
// ---------------------------------------------------------------------------

// (q - q^{-1})^k / (k)_{q^{-1}}!
inline Laurent rhat_coeff(int k) {
    Laurent t = Laurent::q_minus_qinv();
    Laurent num(1);
    for (int i = 0; i < k; ++i) num *= t;
    return num / qfact_paren_qinv(k);
}

enum class PhiSign { plus, minus };

inline Elt phi_pm(const Elt& alpha, PhiSign sign, const Presentation<Laurent>& uq) {
    Elt out(&uq);
    for (auto& [ow, oc] : alpha.terms()) {
        OWordBits ob = oword_bits(ow);
        int wI = hweight_total(ob.rows, ob.len);
        for (int k = 0; k <= ob.len; ++k) {
            RepVec v{{ob.cols, Laurent(1)}};
            NCWord nil = NCWord::gen(sign == PhiSign::plus ? uqgen::E : uqgen::F, k);
            if (k > 0) v = rep_apply_word(nil, std::move(v), ob.len);
            auto it = v.find(ob.rows);
            if (it == v.end()) continue;
            Laurent c = oc * it->second * rhat_coeff(k);
            if (sign == PhiSign::plus) {
                // L^{w(I)} F^k
                Elt term = Elt::monomial(&uq, NCWord::gen(uqgen::L, wI) * NCWord::gen(uqgen::F, k), c);
                out += term;
            } else {
                // S(E^k) L^{-w(I)}
                Elt se = antipode_u(Elt::monomial(&uq, NCWord::gen(uqgen::E, k), Laurent(1)));
                out += (se * Elt::monomial(&uq, NCWord::gen(uqgen::L, -wI), Laurent(1))).scaled(c);
            }
        }
    }
    return out;
}

}  // namespace qmod
