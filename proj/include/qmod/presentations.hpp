#pragma once

#include "qmod/cyclo.hpp"
#include "qmod/ncalg.hpp"

#include <memory>
#include <mutex>

namespace qmod {

// generator indices, fixed across all function-algebra presentations
namespace ogen {
inline constexpr int a = 0, b = 1, c = 2, d = 3;
}
namespace uqgen {
inline constexpr int F = 0, L = 1, E = 2;
}

namespace detail {

template <typename S>
void set_scalar_ctx(Presentation<S>& p);

template <>
inline void set_scalar_ctx<Laurent>(Presentation<Laurent>& p) {
    p.q_quarter = [](int e) { return Laurent::q_quarter(e); };
    p.from = [](const Rational& r) { return Laurent(r); };
}

inline NCWord w(std::initializer_list<std::pair<int, int>> fs) {
    NCWord r;
    for (auto& [g, e] : fs) r.append(g, e);
    return r;
}

}  // namespace detail

// U_q(sl2): generators E, F, L^{+-1} with K = L^2; PBW normal form F^a L^b E^c.
// Relations: L E = q E L, L F = q^{-1} F L, EF - FE = (K - K^{-1})/(q - q^{-1}).
inline const Presentation<Laurent>& presentation_uq_sl2() {
    static const Presentation<Laurent> p = [] {
        Presentation<Laurent> p;
        p.name = "Uq(sl2)";
        p.gens = {{"F"}, {"L", true}, {"E"}};
        detail::set_scalar_ctx(p);
        auto q = [](int e) { return Laurent::q_int(e); };
        p.comm[{uqgen::E, uqgen::L}] = {q(-1)};
        p.comm[{uqgen::L, uqgen::F}] = {q(-1)};
        Laurent inv = Laurent::q_minus_qinv().inverse();
        p.pair2[{uqgen::E, uqgen::F}] = {{
            {detail::w({{uqgen::F, 1}, {uqgen::E, 1}}), Laurent(1)},
            {NCWord::gen(uqgen::L, 2), inv},
            {NCWord::gen(uqgen::L, -2), -inv},
        }};
        return p;
    }();
    return p;
}

namespace detail {
// the shared generator table of O_q(SL2)-shaped algebras: matrix coefficients
// of V_2 in the basis v_0, v_1 = F.v_0, with row/column H-weights
inline std::vector<GenInfo> abcd_gens() {
    return {
        {"a", false, 1, +1, +1},
        {"b", false, 1, -1, +1},
        {"c", false, 1, +1, -1},
        {"d", false, 0, -1, -1},
    };
}
}  // namespace detail

// O_q(SL2), derived from the evaluation pairing with U_q(sl2) (validated by
// the Hopf-pairing suite): ba = q ab, ca = q ac, cb = bc, db = q bd,
// dc = q cd, da = ad + (q - q^{-1}) bc, ad - q^{-1} bc = 1.
// Normal-form basis: a^i b^j d^r and a^i c^k d^r.
inline const Presentation<Laurent>& presentation_oq_sl2() {
    static const Presentation<Laurent> p = [] {
        using namespace ogen;
        Presentation<Laurent> p;
        p.name = "Oq(SL2)";
        p.gens = detail::abcd_gens();
        detail::set_scalar_ctx(p);
        auto q = [](int e) { return Laurent::q_int(e); };
        p.comm[{b, a}] = {q(1)};
        p.comm[{c, a}] = {q(1)};
        p.comm[{c, b}] = {q(0)};
        p.comm[{d, b}] = {q(1)};
        p.comm[{d, c}] = {q(1)};
        // bc = q(ad - 1)
        p.pair2[{b, c}] = {{
            {detail::w({{a, 1}, {d, 1}}), q(1)},
            {NCWord{}, -q(1)},
        }};
        // da = q^2 ad + 1 - q^2
        p.pair2[{d, a}] = {{
            {detail::w({{a, 1}, {d, 1}}), q(2)},
            {NCWord{}, Laurent(1) - q(2)},
        }};
        return p;
    }();
    return p;
}

// L_{0,1}(sl2) by presentation: the seven relations of rel01 oriented for the
// same monomial basis as O_q.
inline const Presentation<Laurent>& presentation_l01_sl2() {
    static const Presentation<Laurent> p = [] {
        using namespace ogen;
        Presentation<Laurent> p;
        p.name = "L01(sl2)";
        p.gens = detail::abcd_gens();
        detail::set_scalar_ctx(p);
        auto q = [](int e) { return Laurent::q_int(e); };
        p.comm[{d, a}] = {q(0)};   // ad = da
        p.comm[{d, b}] = {q(2)};   // db = q^2 bd
        p.comm[{d, c}] = {q(-2)};  // dc = q^{-2} cd  (from cd = q^2 dc)
        // ba = ab + (1 - q^{-2}) bd
        p.pair2[{b, a}] = {{
            {detail::w({{a, 1}, {b, 1}}), Laurent(1)},
            {detail::w({{b, 1}, {d, 1}}), Laurent(1) - q(-2)},
        }};
        // ca = ac - (1 - q^{-2}) dc = ac - (q^{-2} - q^{-4}) cd
        p.pair2[{c, a}] = {{
            {detail::w({{a, 1}, {c, 1}}), Laurent(1)},
            {detail::w({{c, 1}, {d, 1}}), q(-4) - q(-2)},
        }};
        // bc = q^{-2} ad - q^{-2}  (from ad - q^2 bc = 1)
        p.pair2[{b, c}] = {{
            {detail::w({{a, 1}, {d, 1}}), q(-2)},
            {NCWord{}, -q(-2)},
        }};
        // cb = bc + (1 - q^{-2})(da - d^2) = ad - q^{-2} - (1 - q^{-2}) d^2
        p.pair2[{c, b}] = {{
            {detail::w({{a, 1}, {d, 1}}), Laurent(1)},
            {NCWord{}, -q(-2)},
            {NCWord::gen(d, 2), q(-2) - Laurent(1)},
        }};
        return p;
    }();
    return p;
}

// classical O(SL2): the q = 1 limit, used as the Frobenius source
inline const Presentation<Laurent>& presentation_o_classical() {
    static const Presentation<Laurent> p = [] {
        using namespace ogen;
        Presentation<Laurent> p;
        p.name = "O(SL2)";
        p.gens = detail::abcd_gens();
        detail::set_scalar_ctx(p);
        Laurent one(1);
        p.comm[{b, a}] = {one};
        p.comm[{c, a}] = {one};
        p.comm[{c, b}] = {one};
        p.comm[{d, a}] = {one};
        p.comm[{d, b}] = {one};
        p.comm[{d, c}] = {one};
        p.pair2[{b, c}] = {{
            {detail::w({{a, 1}, {d, 1}}), one},
            {NCWord{}, -one},
        }};
        return p;
    }();
    return p;
}

// --- specialization at a primitive l-th root of unity ----------------------

inline Presentation<Cyclo> specialize_presentation_impl(const Presentation<Laurent>& src,
                                                        const std::shared_ptr<const CycloField>& f) {
    Presentation<Cyclo> p;
    p.name = src.name + "@eps" + std::to_string(f->l());
    p.gens = src.gens;
    p.q_quarter = [f](int e) { return Cyclo::q_quarter(f, e); };
    p.from = [f](const Rational& r) {
        std::vector<Rational> c(f->degree(), Rational(0));
        c[0] = r;
        return Cyclo(f, std::move(c));
    };
    for (auto& [k, r] : src.comm) p.comm[k] = {specialize(r.base, f)};
    for (auto& [k, r] : src.pair2) {
        typename Presentation<Cyclo>::ElemRule er;
        for (auto& t : r.rhs) er.rhs.push_back({t.word, specialize(t.coeff, f)});
        p.pair2[k] = std::move(er);
    }
    for (auto& [g, r] : src.pow1) {
        typename Presentation<Cyclo>::PowRule pr;
        pr.exp = r.exp;
        for (auto& t : r.rhs) pr.rhs.push_back({t.word, specialize(t.coeff, f)});
        p.pow1[g] = std::move(pr);
    }
    return p;
}

// Specialized presentations are cached with stable addresses; elements keep
// plain pointers to them.
inline const Presentation<Cyclo>& specialized(const Presentation<Laurent>& src, int l) {
    static std::map<std::pair<std::string, int>, std::unique_ptr<Presentation<Cyclo>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(src.name, l);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto f = CycloField::get(l);
    auto p = std::make_unique<Presentation<Cyclo>>(specialize_presentation_impl(src, f));
    auto& ref = *p;
    cache.emplace(key, std::move(p));
    return ref;
}

// specialize an element coefficient-wise
inline AlgebraElement<Cyclo> specialize_element(const AlgebraElement<Laurent>& e, const Presentation<Cyclo>& pe,
                                                const std::shared_ptr<const CycloField>& f) {
    AlgebraElement<Cyclo> r(&pe);
    for (auto& [w, c] : e.terms()) r.add_term(w, specialize(c, f));
    return r.reduced();
}

// --- convenience builders ---------------------------------------------------

template <typename S>
AlgebraElement<S> gen_elt(const Presentation<S>& p, int g, int exp = 1) {
    return AlgebraElement<S>::generator(&p, g, exp);
}

// omega = q a + q^{-1} d, the central quantum trace element of L_{0,1}
template <typename S>
AlgebraElement<S> omega_elt(const Presentation<S>& p) {
    AlgebraElement<S> e(&p);
    e.add_term(NCWord::gen(ogen::a), p.q_quarter(4));
    e.add_term(NCWord::gen(ogen::d), p.q_quarter(-4));
    return e;
}

// Casimir Omega = (q - q^{-1})^2 FE + qK + q^{-1}K^{-1} in U_q(sl2)
template <typename S>
AlgebraElement<S> casimir_elt(const Presentation<S>& p) {
    AlgebraElement<S> e(&p);
    S t = p.q_quarter(4) - p.q_quarter(-4);
    e.add_term(detail::w({{uqgen::F, 1}, {uqgen::E, 1}}), t * t);
    e.add_term(NCWord::gen(uqgen::L, 2), p.q_quarter(4));
    e.add_term(NCWord::gen(uqgen::L, -2), p.q_quarter(-4));
    return e;
}

}  // namespace qmod
