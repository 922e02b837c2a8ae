#pragma once

#include "qmod/laurent.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmod {

// Thrown when a reduction exceeds the step budget; signals a bad rule set,
// never silent truncation.
struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long rewrite_step_budget() {
    static long budget = [] {
        if (const char* s = std::getenv("QMOD_STEP_BUDGET")) return std::atol(s);
        return 1000000L;
    }();
    return budget;
}

struct GenInfo {
    std::string name;
    bool invertible = false;
    int weight = 1;  // weight for the monomial order
    int lh = 0;      // left coregular H-weight  (K|>g = q^lh g), function algebras only
    int rh = 0;      // right coregular H-weight (g<|K = q^rh g)
};

// Word in the free monoid, adjacent equal generators merged; negative
// exponents only on invertible generators.
struct NCWord {
    std::vector<std::pair<int, int>> factors;  // (gen, exp), exp != 0

    NCWord() = default;
    static NCWord gen(int g, int exp = 1) {
        NCWord w;
        if (exp != 0) w.factors.push_back({g, exp});
        return w;
    }

    bool empty() const { return factors.empty(); }
    int length() const {
        int n = 0;
        for (auto& [g, e] : factors) n += e < 0 ? -e : e;
        return n;
    }

    void append(int g, int e) {
        if (e == 0) return;
        if (!factors.empty() && factors.back().first == g) {
            factors.back().second += e;
            if (factors.back().second == 0) factors.pop_back();
        } else {
            factors.push_back({g, e});
        }
    }
    void append(const NCWord& o) {
        for (auto& [g, e] : o.factors) append(g, e);
    }
    friend NCWord operator*(const NCWord& x, const NCWord& y) {
        NCWord r = x;
        r.append(y);
        return r;
    }

    bool operator==(const NCWord& o) const { return factors == o.factors; }
    bool operator!=(const NCWord& o) const { return !(*this == o); }
};

template <typename S>
struct Term {
    NCWord word;
    S coeff;
};

template <typename S>
class Presentation;

// Monomial order: total weight, then total length, then letter-wise lex
// (generator rank; inverse letters below positive ones).
struct WordLess {
    const std::vector<GenInfo>* gens = nullptr;

    int weight(const NCWord& w) const {
        int s = 0;
        for (auto& [g, e] : w.factors) s += (e < 0 ? -e : e) * (*gens)[g].weight;
        return s;
    }

    bool operator()(const NCWord& x, const NCWord& y) const {
        int wx = weight(x), wy = weight(y);
        if (wx != wy) return wx < wy;
        int lx = x.length(), ly = y.length();
        if (lx != ly) return lx < ly;
        // letter-wise lexicographic
        size_t i = 0, j = 0;
        int ei = 0, ej = 0;
        while (i < x.factors.size() && j < y.factors.size()) {
            auto [gx, ex] = x.factors[i];
            auto [gy, ey] = y.factors[j];
            int sx = ex < 0 ? -1 : 1, sy = ey < 0 ? -1 : 1;
            if (gx != gy) return gx < gy;
            if (sx != sy) return sx < sy;
            int rx = (ex < 0 ? -ex : ex) - ei, ry = (ey < 0 ? -ey : ey) - ej;
            int step = rx < ry ? rx : ry;
            ei += step;
            ej += step;
            if (ei == (x.factors[i].second < 0 ? -x.factors[i].second : x.factors[i].second)) {
                ++i;
                ei = 0;
            }
            if (ej == (y.factors[j].second < 0 ? -y.factors[j].second : y.factors[j].second)) {
                ++j;
                ej = 0;
            }
        }
        return i == x.factors.size() && j < y.factors.size();
    }
};

template <typename S>
class AlgebraElement;

// Finitely presented algebra with a confluent rewriting system. Rules come in
// three shapes: scalar commutations x^a y^b -> s^{ab} y^b x^a, general
// two-letter rules xy -> element, and single-generator power rules g^p ->
// element (used by root-of-unity fiber quotients).
template <typename S>
class Presentation {
   public:
    std::string name;
    std::vector<GenInfo> gens;

    struct CommRule {
        S base;  // x^a y^b = base^{ab} * y^b x^a
    };
    struct ElemRule {
        std::vector<Term<S>> rhs;
    };
    struct PowRule {
        int exp = 0;
        std::vector<Term<S>> rhs;
    };

    std::map<std::pair<int, int>, CommRule> comm;   // keyed by adjacent (x,y) pattern
    std::map<std::pair<int, int>, ElemRule> pair2;  // keyed by adjacent (x,y), single letters
    std::map<int, PowRule> pow1;                    // keyed by generator

    std::function<S(int)> q_quarter;         // quarter-exponent q power as a scalar
    std::function<S(const Rational&)> from;  // rational constant as a scalar

    WordLess less() const { return WordLess{&gens}; }

    int gen_index(const std::string& n) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == n) return static_cast<int>(i);
        throw std::invalid_argument(name + ": unknown generator " + n);
    }

    int lweight(const NCWord& w) const {
        int s = 0;
        for (auto& [g, e] : w.factors) s += e * gens[g].lh;
        return s;
    }
    int rweight(const NCWord& w) const {
        int s = 0;
        for (auto& [g, e] : w.factors) s += e * gens[g].rh;
        return s;
    }

    S scalar_pow(const S& base, long e) const {
        S acc = from(Rational(1));
        S b = e < 0 ? base.inverse() : base;
        long k = e < 0 ? -e : e;
        while (k > 0) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }

    // Reduce c*w to normal form, accumulating into out. Returns steps used.
    long reduce_into(std::map<NCWord, S, WordLess>& out, const NCWord& w0, const S& c0, long budget) const {
        std::vector<Term<S>> stack;
        stack.push_back({w0, c0});
        long steps = 0;
        while (!stack.empty()) {
            Term<S> t = std::move(stack.back());
            stack.pop_back();
            if (t.coeff.is_zero()) continue;
            if (++steps > budget) throw engine_error(name + ": rewrite step budget exceeded");
            // find leftmost redex
            bool reduced = false;
            const auto& f = t.word.factors;
            for (size_t i = 0; i < f.size() && !reduced; ++i) {
                // power rule at factor i
                if (auto it = pow1.find(f[i].first); it != pow1.end() && f[i].second >= it->second.exp) {
                    apply_pow(stack, t, i, it->second);
                    reduced = true;
                    break;
                }
                if (i + 1 >= f.size()) break;
                auto key = std::make_pair(f[i].first, f[i + 1].first);
                if (auto it = comm.find(key); it != comm.end()) {
                    apply_comm(stack, t, i, it->second);
                    reduced = true;
                    break;
                }
                if (auto it = pair2.find(key); it != pair2.end()) {
                    if (f[i].second >= 1 && f[i + 1].second >= 1) {
                        apply_pair(stack, t, i, it->second);
                        reduced = true;
                        break;
                    }
                }
            }
            if (!reduced) {
                auto it = out.find(t.word);
                if (it == out.end()) {
                    out.emplace(t.word, t.coeff);
                } else {
                    it->second += t.coeff;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return steps;
    }

    // One-step reductions at every redex position (confluence checking).
    std::vector<std::vector<Term<S>>> all_single_steps(const NCWord& w) const {
        std::vector<std::vector<Term<S>>> res;
        const auto& f = w.factors;
        for (size_t i = 0; i < f.size(); ++i) {
            if (auto it = pow1.find(f[i].first); it != pow1.end() && f[i].second >= it->second.exp) {
                std::vector<Term<S>> st;
                Term<S> t{w, from(Rational(1))};
                apply_pow(st, t, i, it->second);
                res.push_back(std::move(st));
            }
            if (i + 1 >= f.size()) continue;
            auto key = std::make_pair(f[i].first, f[i + 1].first);
            if (auto it = comm.find(key); it != comm.end()) {
                std::vector<Term<S>> st;
                Term<S> t{w, from(Rational(1))};
                apply_comm(st, t, i, it->second);
                res.push_back(std::move(st));
            }
            if (auto it = pair2.find(key); it != pair2.end()) {
                if (f[i].second >= 1 && f[i + 1].second >= 1) {
                    std::vector<Term<S>> st;
                    Term<S> t{w, from(Rational(1))};
                    apply_pair(st, t, i, it->second);
                    res.push_back(std::move(st));
                }
            }
        }
        return res;
    }

   private:
    static NCWord splice(const NCWord& w, size_t lo, size_t hi, const NCWord& mid) {
        // w.factors[0,lo) + mid + w.factors[hi,end)
        NCWord r;
        for (size_t k = 0; k < lo; ++k) r.append(w.factors[k].first, w.factors[k].second);
        r.append(mid);
        for (size_t k = hi; k < w.factors.size(); ++k) r.append(w.factors[k].first, w.factors[k].second);
        return r;
    }

    void apply_comm(std::vector<Term<S>>& out, const Term<S>& t, size_t i, const CommRule& r) const {
        auto [gx, ex] = t.word.factors[i];
        auto [gy, ey] = t.word.factors[i + 1];
        NCWord mid = NCWord::gen(gy, ey) * NCWord::gen(gx, ex);
        S c = t.coeff * scalar_pow(r.base, static_cast<long>(ex) * ey);
        out.push_back({splice(t.word, i, i + 2, mid), std::move(c)});
    }

    void apply_pair(std::vector<Term<S>>& out, const Term<S>& t, size_t i, const ElemRule& r) const {
        auto [gx, ex] = t.word.factors[i];
        auto [gy, ey] = t.word.factors[i + 1];
        for (const auto& term : r.rhs) {
            NCWord mid = NCWord::gen(gx, ex - 1) * term.word * NCWord::gen(gy, ey - 1);
            out.push_back({splice(t.word, i, i + 2, mid), t.coeff * term.coeff});
        }
    }

    void apply_pow(std::vector<Term<S>>& out, const Term<S>& t, size_t i, const PowRule& r) const {
        auto [g, e] = t.word.factors[i];
        for (const auto& term : r.rhs) {
            NCWord mid = NCWord::gen(g, e - r.exp) * term.word;
            out.push_back({splice(t.word, i, i + 1, mid), t.coeff * term.coeff});
        }
    }
};

template <typename S>
class AlgebraElement {
   public:
    using TermMap = std::map<NCWord, S, WordLess>;

    AlgebraElement() : pres_(nullptr), terms_(WordLess{nullptr}) {}
    explicit AlgebraElement(const Presentation<S>* p) : pres_(p), terms_(p->less()) {}

    static AlgebraElement unit(const Presentation<S>* p) {
        AlgebraElement e(p);
        e.terms_.emplace(NCWord{}, p->from(Rational(1)));
        return e;
    }
    static AlgebraElement generator(const Presentation<S>* p, int g, int exp = 1) {
        AlgebraElement e(p);
        e.add_term(NCWord::gen(g, exp), p->from(Rational(1)));
        return e;
    }
    static AlgebraElement monomial(const Presentation<S>* p, const NCWord& w, const S& c) {
        AlgebraElement e(p);
        e.add_term(w, c);
        return e.reduced();
    }

    const Presentation<S>* pres() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const NCWord& w, const S& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        x.check_same(y);
        AlgebraElement r = x;
        for (auto& [w, c] : y.terms_) r.add_term(w, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        x.check_same(y);
        AlgebraElement r = x;
        for (auto& [w, c] : y.terms_) r.add_term(w, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r(pres_);
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

    AlgebraElement scaled(const S& s) const {
        AlgebraElement r(pres_);
        if (s.is_zero()) return r;
        for (auto& [w, c] : terms_) {
            S sc = c * s;
            if (!sc.is_zero()) r.terms_.emplace(w, sc);
        }
        return r;
    }

    // product (concatenate + reduce)
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        x.check_same(y);
        AlgebraElement r(x.pres_);
        long budget = rewrite_step_budget();
        for (auto& [wx, cx] : x.terms_)
            for (auto& [wy, cy] : y.terms_) x.pres_->reduce_into(r.terms_, wx * wy, cx * cy, budget);
        return r;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    AlgebraElement reduced() const {
        AlgebraElement r(pres_);
        long budget = rewrite_step_budget();
        for (auto& [w, c] : terms_) pres_->reduce_into(r.terms_, w, c, budget);
        return r;
    }

    bool operator==(const AlgebraElement& o) const {
        check_same(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement pow(int k) const {
        AlgebraElement r = unit(pres_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << term_str(it->first, it->second);
        }
        return os.str();
    }

    std::string word_str(const NCWord& w) const {
        if (w.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (auto& [g, e] : w.factors) {
            if (!first) os << "*";
            first = false;
            os << pres_->gens[g].name;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

   private:
    std::string term_str(const NCWord& w, const S& c) const {
        std::string cs = c.str();
        bool simple = cs.find_first_of("+-") == std::string::npos ||
                      (cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos);
        if (w.empty()) return simple ? cs : "(" + cs + ")";
        if (c.is_one()) return word_str(w);
        return (simple ? cs : "(" + cs + ")") + "*" + word_str(w);
    }

    void check_same(const AlgebraElement& o) const {
        if (pres_ != o.pres_) throw std::invalid_argument("AlgebraElement: presentation mismatch");
    }

    const Presentation<S>* pres_;
    TermMap terms_;
};

template <typename S>
AlgebraElement<S> normal_form(const AlgebraElement<S>& e) {
    return e.reduced();
}

template <typename S>
AlgebraElement<S> multiply(const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
    return x * y;
}

// --- local confluence ------------------------------------------------------

struct ConfluenceWitness {
    bool ok = true;
    std::string word;  // first word with two distinct normal forms
    std::string nf1, nf2;
};

// Double-reduction check on all words up to the given letter length: every
// single-step reduct of a word must reach the same normal form. Also verifies
// each rule decreases the monomial order.
template <typename S>
ConfluenceWitness check_confluence(const Presentation<S>& p, int degree_bound = 4) {
    ConfluenceWitness cw;
    WordLess less = p.less();
    // orientation of rules
    auto check_rhs = [&](const NCWord& lhs, const std::vector<Term<S>>& rhs) {
        for (auto& t : rhs)
            if (!t.word.empty() && !less(t.word, lhs) && !(t.word == lhs))
                throw std::logic_error(p.name + ": rule RHS not smaller than LHS");
    };
    for (auto& [key, r] : p.pair2) check_rhs(NCWord::gen(key.first) * NCWord::gen(key.second), r.rhs);
    for (auto& [g, r] : p.pow1) check_rhs(NCWord::gen(g, r.exp), r.rhs);

    // letters: every generator, plus inverses of invertible ones
    std::vector<std::pair<int, int>> letters;
    for (size_t g = 0; g < p.gens.size(); ++g) {
        letters.push_back({static_cast<int>(g), 1});
        if (p.gens[g].invertible) letters.push_back({static_cast<int>(g), -1});
    }

    long budget = rewrite_step_budget();
    std::vector<NCWord> layer{NCWord{}};
    for (int len = 1; len <= degree_bound; ++len) {
        std::vector<NCWord> next;
        for (const auto& w : layer)
            for (auto& [g, e] : letters) {
                NCWord nw = w;
                nw.append(g, e);
                if (nw.length() != len) continue;  // merged/cancelled, seen earlier
                next.push_back(nw);
            }
        for (const auto& w : next) {
            auto steps = p.all_single_steps(w);
            if (steps.size() < 2) continue;
            std::optional<std::map<NCWord, S, WordLess>> ref;
            for (auto& st : steps) {
                std::map<NCWord, S, WordLess> nf(p.less());
                for (auto& t : st) p.reduce_into(nf, t.word, t.coeff, budget);
                if (!ref) {
                    ref = std::move(nf);
                } else if (!(*ref == nf)) {
                    cw.ok = false;
                    AlgebraElement<S> e(&p);
                    cw.word = e.word_str(w);
                    AlgebraElement<S> a(&p), b(&p);
                    for (auto& [ww, cc] : *ref) a.add_term(ww, cc);
                    for (auto& [ww, cc] : nf) b.add_term(ww, cc);
                    cw.nf1 = a.str();
                    cw.nf2 = b.str();
                    return cw;
                }
            }
        }
        layer = std::move(next);
    }
    return cw;
}

}  // namespace qmod
