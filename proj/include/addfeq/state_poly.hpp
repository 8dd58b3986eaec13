#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "addfeq/error.hpp"
#include "addfeq/linform.hpp"
#include "addfeq/rational.hpp"

namespace addfeq {

// Formal monomial X^a * D1^j1 * D2^j2 * ... where X stands for x and D_t for
// the t-th iterate d^t(x) of a derivation. These quantities are algebraically
// independent, so identities are decided monomial by monomial.
//
// derivative weight = sum t*j_t, total degree = a + sum j_t.
struct StateMonomial {
    unsigned x_exp = 0;
    std::vector<std::pair<unsigned, unsigned>> d_exps; // (t, j_t), t ascending, j_t > 0

    static StateMonomial x_power(unsigned a) {
        StateMonomial m;
        m.x_exp = a;
        return m;
    }

    static StateMonomial d_var(unsigned t, unsigned j = 1) {
        StateMonomial m;
        if (j > 0) m.d_exps.emplace_back(t, j);
        return m;
    }

    unsigned weight() const {
        unsigned w = 0;
        for (auto [t, j] : d_exps) w += t * j;
        return w;
    }

    unsigned degree() const {
        unsigned d = x_exp;
        for (auto [t, j] : d_exps) d += j;
        return d;
    }

    unsigned d_exp(unsigned t) const {
        for (auto [s, j] : d_exps)
            if (s == t) return j;
        return 0;
    }

    StateMonomial operator*(const StateMonomial& o) const {
        StateMonomial r;
        r.x_exp = x_exp + o.x_exp;
        auto a = d_exps.begin(), b = o.d_exps.begin();
        while (a != d_exps.end() || b != o.d_exps.end()) {
            if (b == o.d_exps.end() || (a != d_exps.end() && a->first < b->first)) {
                r.d_exps.push_back(*a++);
            } else if (a == d_exps.end() || b->first < a->first) {
                r.d_exps.push_back(*b++);
            } else {
                r.d_exps.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }

    friend bool operator==(const StateMonomial&, const StateMonomial&) = default;

    std::string str() const {
        std::string s;
        if (x_exp > 0) s = x_exp == 1 ? "X" : "X^" + std::to_string(x_exp);
        for (auto [t, j] : d_exps) {
            if (!s.empty()) s += "*";
            s += "D" + std::to_string(t);
            if (j > 1) s += "^" + std::to_string(j);
        }
        return s.empty() ? "1" : s;
    }
};

// Canonical term order: weight descending, then total degree descending, then
// X exponent descending, then the D exponent vectors lexicographically. Used
// for map storage, rendering and golden files alike.
struct StateMonomialOrder {
    bool operator()(const StateMonomial& a, const StateMonomial& b) const {
        unsigned wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa > wb;
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
        return a.d_exps < b.d_exps;
    }
};

// Sparse polynomial over StateMonomial. Coeff is Rational for concrete
// expansions and LinForm for constraint rows. Immutable in spirit: all
// operations return fresh values, and zero coefficients are never stored.
template <class Coeff>
class BasicStatePoly {
public:
    using TermMap = std::map<StateMonomial, Coeff, StateMonomialOrder>;

    BasicStatePoly() = default;

    static BasicStatePoly zero() { return {}; }

    static BasicStatePoly one() { return monomial(StateMonomial{}, Coeff(Rational(1))); }

    static BasicStatePoly monomial(const StateMonomial& m, Coeff c) {
        BasicStatePoly p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Coeff coeff(const StateMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(Rational(0)) : it->second;
    }

    void add_term(const StateMonomial& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicStatePoly& operator+=(const BasicStatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    BasicStatePoly& operator-=(const BasicStatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, Coeff(Rational(0)) - c);
        return *this;
    }

    friend BasicStatePoly operator+(BasicStatePoly a, const BasicStatePoly& b) {
        a += b;
        return a;
    }

    friend BasicStatePoly operator-(BasicStatePoly a, const BasicStatePoly& b) {
        a -= b;
        return a;
    }

    BasicStatePoly scaled(const Rational& s) const {
        BasicStatePoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    friend bool operator==(const BasicStatePoly& a, const BasicStatePoly& b) {
        return a.terms_ == b.terms_;
    }

    unsigned max_weight() const {
        unsigned w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
        return w;
    }

private:
    TermMap terms_;
};

using StatePoly = BasicStatePoly<Rational>;
using SymbolicStatePoly = BasicStatePoly<LinForm>;

inline StatePoly operator*(const StatePoly& a, const StatePoly& b) {
    StatePoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

// Lift a concrete polynomial into constraint rows, tagging every coefficient
// with the given unknown.
inline SymbolicStatePoly attach_unknown(const StatePoly& p, const UnknownId& id) {
    SymbolicStatePoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, LinForm::unknown(id, c));
    return r;
}

// Sub-polynomial of the terms whose derivative weight equals `weight`.
template <class Coeff>
BasicStatePoly<Coeff> grade_filter(const BasicStatePoly<Coeff>& p, unsigned weight) {
    BasicStatePoly<Coeff> r;
    for (const auto& [m, c] : p.terms())
        if (m.weight() == weight) r.add_term(m, c);
    return r;
}

// Substitute X -> 1 and every D_t -> 1; the sum of all coefficients.
inline Rational eval_all_ones(const StatePoly& p) {
    Rational s = 0;
    for (const auto& [m, c] : p.terms()) s += c;
    return s;
}

// Canonical text form, e.g. "3*X^2*D2 + 6*X*D1^2". Inverse of
// parse_state_poly.
std::string render(const StatePoly& p);
StatePoly parse_state_poly(const std::string& text);

} // namespace addfeq
