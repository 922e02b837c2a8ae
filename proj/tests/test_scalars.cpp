#include "qmod/chebyshev.hpp"
#include "qmod/cyclo.hpp"
#include "qmod/laurent.hpp"
#include "qmod/qcomb.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qmod;

namespace {

Laurent q(int e) { return Laurent::q_int(e); }

Laurent random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-6, 6), coef(-5, 5), den(1, 3);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(2 * expd(rng), Rational(coef(rng), den(rng)));
    return Laurent(p);
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(qint(1, QVariant::bracket) == Laurent(1));
    CHECK(qint(3, QVariant::bracket) == q(2) + Laurent(1) + q(-2));
    CHECK(qint(0, QVariant::paren).is_zero());
    CHECK(qfact(0, QVariant::paren) == Laurent(1));  // (0)_q! = 1
    CHECK(qint(2, QVariant::paren) == Laurent(1) + q(1));
}

TEST_CASE("q-binomials") {
    CHECK(qbinom(2, 1) == q(1) + q(-1));
    // brute-force factorial oracle
    auto oracle = [](int p, int k) { return qfact(p) / (qfact(p - k) * qfact(k)); };
    CHECK(qbinom(4, 2) == oracle(4, 2));
    CHECK(qbinom(4, 2) == q(4) + q(2) + Laurent(2) + q(-2) + q(-4));
    CHECK(qbinom(3, 0, QVariant::paren) == Laurent(1));
    CHECK_THROWS_AS(qbinom(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(qbinom(2, -1), std::invalid_argument);
    for (int p = 0; p <= 6; ++p)
        for (int k = 0; k <= p; ++k) {
            CHECK(qbinom(p, k) == oracle(p, k));
            CHECK(qbinom(p, k).is_polynomial());
        }
}

TEST_CASE("chebyshev") {
    CHECK(chebyshev_t(0).coeffs() == std::vector<Integer>{2});
    CHECK(chebyshev_t(1).coeffs() == std::vector<Integer>{0, 1});
    CHECK(chebyshev_t(3).coeffs() == std::vector<Integer>{0, -3, 0, 1});  // x^3 - 3x
    // T_k(y + y^{-1}) = y^k + y^{-k} in the Laurent ring
    Laurent y = q(1), yinv = q(-1);
    for (int k = 0; k <= 12; ++k) {
        Laurent lhs = chebyshev_t(k).eval(y + yinv, Laurent(1));
        Laurent rhs = (k == 0) ? Laurent(2) : Laurent::q_int(k) + Laurent::q_int(-k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("laurent fractions") {
    Laurent t = Laurent::q_minus_qinv();
    Laurent inv = t.inverse();
    CHECK(t * inv == Laurent(1));
    CHECK(!inv.is_polynomial());
    CHECK((inv + inv) * t == Laurent(2));
    // exactness: [4]!/[2]![2]! is polynomial again
    CHECK((qfact(4) / (qfact(2) * qfact(2))).is_polynomial());
}

TEST_CASE("specialize basics") {
    auto f3 = CycloField::get(3);
    // eps^l = 1
    CHECK(specialize(Laurent::q_int(3), f3).is_one());
    CHECK(specialize(Laurent::q_int(5), CycloField::get(5)).is_one());
    // q^{1/2} -> x^{(l+1)/2} = x^2 at l=3
    CHECK(specialize(Laurent::q_half(1), f3) == Cyclo::eps_power(f3, 2));
    // q - q^{-1} at l=3: x - x^2, reduced mod x^2+x+1 (= 2x + 1)
    Cyclo v = specialize(q(1) - q(-1), f3);
    Cyclo expect = Cyclo(f3, {Rational(1), Rational(2)});
    CHECK(v == expect);
    CHECK_THROWS_AS(specialize(q(1), 4), std::invalid_argument);
    // quarter-exponent consistency: (q^{1/4})^2 = q^{1/2}
    CHECK(specialize(Laurent::q_quarter(1), f3) * specialize(Laurent::q_quarter(1), f3) ==
          specialize(Laurent::q_half(1), f3));
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937_64 rng(777);
    auto f = CycloField::get(5);
    for (int i = 0; i < 200; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        CHECK(specialize(a * b, f) == specialize(a, f) * specialize(b, f));
        CHECK(specialize(a + b, f) == specialize(a, f) + specialize(b, f));
    }
}

TEST_CASE("[l]_eps = 0 at a primitive l-th root") {
    for (int l : {3, 5, 7}) CHECK(specialize(qint(l), l).is_zero());
}

TEST_CASE("cyclo field inverse") {
    auto f = CycloField::get(3);
    Cyclo x = Cyclo::eps_power(f, 1);
    Cyclo u = Cyclo(Rational(2)) + x;  // 2 + eps
    CHECK(u * u.inverse() == Cyclo(Rational(1)));
    CHECK_THROWS_AS(Cyclo(f, std::vector<Rational>(f->degree(), Rational(0))).inverse(), std::domain_error);
    // eps^{1/2} squared is eps, eps^{1/4} to the 4th is eps
    auto f7 = CycloField::get(7);
    Cyclo r = Cyclo::q_quarter(f7, 1);
    CHECK(r * r * r * r == Cyclo::eps_power(f7, 1));
}

TEST_CASE("printing") {
    CHECK((q(2) + Laurent(1) + q(-2)).str() == "q^2 + 1 + q^-2");
    CHECK((Laurent::q_half(1)).str() == "q^(1/2)");
    CHECK((Laurent(Rational(1, 2)) * q(1)).str() == "1/2*q^1");
    CHECK(Laurent().str() == "0");
    CHECK(Laurent::q_minus_qinv().inverse().str() == "(q^1)/(q^2 - 1)");
}
