#include "qmod/presentations.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qmod;
using namespace qmod::ogen;

namespace {

using Elt = AlgebraElement<Laurent>;

Laurent q(int e) { return Laurent::q_int(e); }

Elt word_elt(const Presentation<Laurent>& p, std::initializer_list<int> letters) {
    NCWord w;
    for (int g : letters) w.append(g, 1);
    return Elt::monomial(&p, w, Laurent(1));
}

Elt random_elt(const Presentation<Laurent>& p, std::mt19937_64& rng, int maxlen = 3, int nterms = 3) {
    std::uniform_int_distribution<int> len(0, maxlen), g(0, (int)p.gens.size() - 1), coef(-3, 3);
    Elt e(&p);
    for (int t = 0; t < nterms; ++t) {
        NCWord w;
        int L = len(rng);
        for (int i = 0; i < L; ++i) w.append(g(rng), 1);
        e.add_term(w, Laurent(Rational(coef(rng))));
    }
    return e.reduced();
}

}  // namespace

TEST_CASE("Uq(sl2) relations") {
    const auto& p = presentation_uq_sl2();
    Elt E = gen_elt(p, uqgen::E), F = gen_elt(p, uqgen::F), L = gen_elt(p, uqgen::L);
    Elt Linv = gen_elt(p, uqgen::L, -1);
    // EF = FE + (K - K^{-1})/(q - q^{-1})
    Elt expected = F * E;
    Laurent inv = Laurent::q_minus_qinv().inverse();
    expected.add_term(NCWord::gen(uqgen::L, 2), inv);
    expected.add_term(NCWord::gen(uqgen::L, -2), -inv);
    CHECK(E * F == expected);
    CHECK(L * E == (E * L).scaled(q(1)));
    CHECK(L * F == (F * L).scaled(q(-1)));
    CHECK(L * Linv == Elt::unit(&p));
    CHECK(normal_form(E * F - F * E).str() == "((q^1)/(q^2 - 1))*L^2 + ((-q^1)/(q^2 - 1))*L^-2");
}

TEST_CASE("Oq(SL2) relations") {
    const auto& p = presentation_oq_sl2();
    Elt A = gen_elt(p, a), B = gen_elt(p, b), C = gen_elt(p, c), D = gen_elt(p, d);
    CHECK(B * A == (A * B).scaled(q(1)));
    CHECK(C * A == (A * C).scaled(q(1)));
    CHECK(C * B == B * C);
    CHECK(D * B == (B * D).scaled(q(1)));
    CHECK(D * C == (C * D).scaled(q(1)));
    // ad - q^{-1} bc = 1 and da - ad = (q - q^{-1}) bc
    CHECK(A * D - (B * C).scaled(q(-1)) == Elt::unit(&p));
    CHECK(D * A - A * D == (B * C).scaled(Laurent::q_minus_qinv()));
}

TEST_CASE("L01(sl2) rel01") {
    const auto& p = presentation_l01_sl2();
    Elt A = gen_elt(p, a), B = gen_elt(p, b), C = gen_elt(p, c), D = gen_elt(p, d);
    Elt one = Elt::unit(&p);
    CHECK(D * B == (B * D).scaled(q(2)));
    CHECK(A * D == D * A);
    CHECK(C * D == (D * C).scaled(q(2)));
    CHECK(A * B - B * A == (B * D).scaled(q(-2) - Laurent(1)));  // ab - ba = -(1-q^{-2}) bd
    CHECK(C * B - B * C == (D * A - D * D).scaled(Laurent(1) - q(-2)));
    CHECK(A * C - C * A == (D * C).scaled(Laurent(1) - q(-2)));
    CHECK(A * D - (B * C).scaled(q(2)) == one);
    CHECK(normal_form((B * D).scaled(q(2)) - word_elt(p, {d, b})).is_zero());
    // cb reduces to bc + (1-q^{-2})(da - d^2)
    Elt cb = word_elt(p, {c, b});
    Elt rhs = B * C + (D * A - D * D).scaled(Laurent(1) - q(-2));
    CHECK(cb == rhs);
}

TEST_CASE("omega is central in L01") {
    const auto& p = presentation_l01_sl2();
    Elt om = omega_elt(p);
    // against all words of length <= 3
    std::vector<Elt> words{Elt::unit(&p)};
    for (int g1 = 0; g1 < 4; ++g1) {
        words.push_back(gen_elt(p, g1));
        for (int g2 = 0; g2 < 4; ++g2) {
            words.push_back(word_elt(p, {g1, g2}));
            for (int g3 = 0; g3 < 4; ++g3) words.push_back(word_elt(p, {g1, g2, g3}));
        }
    }
    for (auto& x : words) CHECK(om * x == x * om);
}

TEST_CASE("normal_form is idempotent and linear") {
    std::mt19937_64 rng(31337);
    for (const Presentation<Laurent>* p :
         {&presentation_uq_sl2(), &presentation_oq_sl2(), &presentation_l01_sl2()}) {
        CHECK(normal_form(Elt(p)).is_zero());
        for (int t = 0; t < 1000; ++t) {
            Elt e = random_elt(*p, rng);
            CHECK(normal_form(e) == e);
        }
    }
}

TEST_CASE("multiply is associative") {
    std::mt19937_64 rng(4242);
    for (const Presentation<Laurent>* p :
         {&presentation_uq_sl2(), &presentation_oq_sl2(), &presentation_l01_sl2()}) {
        for (int t = 0; t < 60; ++t) {
            Elt x = random_elt(*p, rng, 2, 2), y = random_elt(*p, rng, 2, 2), z = random_elt(*p, rng, 2, 2);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("presentation mismatch rejected") {
    Elt x = gen_elt(presentation_oq_sl2(), a), y = gen_elt(presentation_l01_sl2(), a);
    CHECK_THROWS_AS(x * y, std::invalid_argument);
}

TEST_CASE("PBW spanning for Uq words") {
    const auto& p = presentation_uq_sl2();
    // every word of length <= 5 in E, F, L^{±1} reduces to F^a L^b E^c
    std::vector<std::pair<int, int>> letters{{uqgen::F, 1}, {uqgen::L, 1}, {uqgen::L, -1}, {uqgen::E, 1}};
    std::vector<NCWord> layer{NCWord{}};
    for (int len = 1; len <= 5; ++len) {
        std::vector<NCWord> next;
        for (auto& w0 : layer)
            for (auto& [g, e] : letters) {
                NCWord w = w0;
                w.append(g, e);
                next.push_back(w);
            }
        for (auto& w0 : next) {
            Elt e = Elt::monomial(&p, w0, Laurent(1));
            for (auto& [w, c] : e.terms()) {
                // pattern F^a L^b E^c
                int stage = 0;
                for (auto& [g, ex] : w.factors) {
                    int want = g == uqgen::F ? 0 : g == uqgen::L ? 1 : 2;
                    CHECK(want >= stage);
                    stage = want;
                    if (g != uqgen::L) CHECK(ex > 0);
                }
            }
        }
        layer = std::move(next);
    }
}

TEST_CASE("Oq normal words are the stated monomial basis") {
    const auto& p = presentation_oq_sl2();
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 300; ++t) {
        Elt e = random_elt(p, rng, 4, 2);
        for (auto& [w, coeff] : e.terms()) {
            // a^i b^j d^r or a^i c^k d^r
            int stage = 0;
            bool seen_b = false, seen_c = false;
            for (auto& [g, ex] : w.factors) {
                CHECK(ex > 0);
                int want = g == a ? 0 : (g == b || g == c) ? 1 : 2;
                CHECK(want >= stage);
                stage = want;
                seen_b |= g == b;
                seen_c |= g == c;
            }
            CHECK(!(seen_b && seen_c));
        }
    }
}

TEST_CASE("confluence of the shipped presentations") {
    CHECK(check_confluence(presentation_uq_sl2(), 4).ok);
    CHECK(check_confluence(presentation_oq_sl2(), 4).ok);
    CHECK(check_confluence(presentation_l01_sl2(), 4).ok);
    CHECK(check_confluence(presentation_o_classical(), 4).ok);
}

TEST_CASE("broken rule set fails confluence with witness") {
    // drop the lower terms of the cb rule of rel01
    Presentation<Laurent> broken = presentation_l01_sl2();
    broken.name = "L01(sl2)-broken";
    broken.pair2[{c, b}] = {{{detail::w({{a, 1}, {d, 1}}), Laurent(1)}}};
    auto r = check_confluence(broken, 4);
    CHECK(!r.ok);
    CHECK(!r.word.empty());
    CHECK(r.nf1 != r.nf2);
}

TEST_CASE("step budget error") {
    // a looping rule set: x y -> y x and y x -> x y
    Presentation<Laurent> p;
    p.name = "loop";
    p.gens = {{"x"}, {"y"}};
    detail::set_scalar_ctx(p);
    p.pair2[{1, 0}] = {{{detail::w({{0, 1}, {1, 1}}), Laurent(1)}}};
    p.pair2[{0, 1}] = {{{detail::w({{1, 1}, {0, 1}}), Laurent(1)}}};
    Elt e(&p);
    e.add_term(detail::w({{0, 1}, {1, 1}}), Laurent(1));
    CHECK_THROWS_AS(e.reduced(), engine_error);
}
