#pragma once

#include <map>
#include <string>
#include <vector>

#include "addfeq/multi_index.hpp"
#include "addfeq/rational.hpp"
#include "addfeq/state_poly.hpp"

namespace addfeq {

// Caps on the expansion arguments; beyond them the combinatorics explode, so
// requests fail with a clear input error instead of exhausting memory.
struct LeibnizLimits {
    unsigned max_order = 64;      // k
    unsigned max_arity = 64;      // p
    std::size_t max_compositions = 1u << 22;
};

LeibnizLimits leibniz_limits();
void set_leibniz_limits(const LeibnizLimits& limits);

// d^k(x^p) collected over state monomials: every monomial has derivative
// weight k and total degree p. Memoized by (k, p); safe for concurrent use.
const StatePoly& expand_power(unsigned k, unsigned p);

// Same contract as expand_power, computed by a structurally different
// algorithm: apply the formal derivation X -> D1, D_t -> D_{t+1} with the
// product rule, k times, starting from X^p. Serves as an internal oracle.
StatePoly expand_power_recursive(unsigned k, unsigned p);

// d^k(x_1...x_p): one entry per weak composition (l_1,...,l_p) of k, with the
// multinomial coefficient k!/(l_1!...l_p!).
struct ProductExpansion {
    unsigned arity = 0;
    unsigned order = 0;
    std::map<std::vector<unsigned>, Rational> terms;
};

ProductExpansion expand_product(unsigned k, unsigned p);

// ---------------------------------------------------------------------------
// Multi-derivation state algebra.
//
// Variables are X and D[beta] for the compositions d^beta = d_1^{b_1} o ... o
// d_r^{b_r} applied to x, indexed by multi-index beta. Substituting every
// derivation by a single one maps D[beta] to D_{|beta|}.

struct MultiDerivMonomial {
    unsigned x_exp = 0;
    std::vector<std::pair<MultiIndex, unsigned>> d_exps; // sorted, exps > 0

    friend bool operator==(const MultiDerivMonomial&, const MultiDerivMonomial&) = default;
    std::string str() const;
};

struct MultiDerivOrder {
    bool operator()(const MultiDerivMonomial& a, const MultiDerivMonomial& b) const {
        if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
        return a.d_exps < b.d_exps;
    }
};

class MultiDerivPoly {
public:
    using TermMap = std::map<MultiDerivMonomial, Rational, MultiDerivOrder>;

    static MultiDerivPoly x_power(unsigned p);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiDerivMonomial& m, const Rational& c);

    // formal partial derivation along coordinate `var` (0-based position in
    // the multi-indices): X -> D[e_var], D[beta] -> D[beta + e_var]
    MultiDerivPoly derive(unsigned var) const;

    friend bool operator==(const MultiDerivPoly&, const MultiDerivPoly&) = default;

private:
    TermMap terms_;
};

// Expansion of d^alpha(x^p) over the multi-derivation state variables.
MultiDerivPoly bell_expand(const MultiIndex& alpha, unsigned p);

// Image under the single-derivation substitution D[beta] -> D_{|beta|}.
StatePoly collapse_single(const MultiDerivPoly& p);

} // namespace addfeq
