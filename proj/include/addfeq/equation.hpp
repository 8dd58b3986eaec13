#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addfeq/rational.hpp"

namespace addfeq {

// One summand f_i(x^p) * g_i(x^q) of the equation, times a constant
// coefficient. A pinned factor is constrained to a multiple of the identity,
// so only its order-0 coefficient exists; a pinned factor may carry exponent
// zero (the factor is then constant).
struct Term {
    int index = 0;     // 1-based position after canonicalization
    unsigned p = 0;    // inner exponent on the f side
    unsigned q = 0;    // inner exponent on the g side
    bool f_pinned = false;
    bool g_pinned = false;
    Rational coef = Rational(1);

    unsigned total_degree() const { return p + q; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.index == b.index && a.p == b.p && a.q == b.q &&
               a.f_pinned == b.f_pinned && a.g_pinned == b.g_pinned && a.coef == b.coef;
    }
};

// Canonical equation: terms sorted by p ascending and reindexed 1..n. The
// common degree N is present exactly when all p_i + q_i agree.
struct EquationSpec {
    std::vector<Term> terms;
    std::optional<unsigned> common_degree; // N

    int n() const { return static_cast<int>(terms.size()); }

    static EquationSpec from_terms(std::vector<Term> ts);

    friend bool operator==(const EquationSpec& a, const EquationSpec& b) {
        return a.terms == b.terms && a.common_degree == b.common_degree;
    }
};

// Pass/fail with witnesses for the three admissibility conditions:
//   c1: p_1 < ... < p_n strictly increasing
//   c2: p_i + q_i = N for a single N
//   c3: p_i != q_j for all i != j
struct ConditionReport {
    bool c1_pass = false;
    std::optional<std::pair<int, int>> c1_offending; // term indices sharing p

    bool c2_pass = false;
    std::vector<unsigned> c2_sums; // distinct p_i + q_i, ascending

    bool c3_pass = false;
    std::optional<std::pair<int, int>> c3_offending; // (i, j) with p_i == q_j

    bool all_pass() const { return c1_pass && c2_pass && c3_pass; }
    std::string failure_summary() const;
};

ConditionReport check_conditions(const EquationSpec& spec);

// Partition the terms into groups of equal p+q, each a homogeneous
// EquationSpec. Additive maps are Q-homogeneous, so the groups must vanish
// separately. Groups appear in order of first occurrence in the input.
std::vector<EquationSpec> homogenize(const std::vector<Term>& terms);

} // namespace addfeq
