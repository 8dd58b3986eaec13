#pragma once

#include <map>
#include <utility>
#include <vector>

#include "addfeq/equation.hpp"
#include "addfeq/linform.hpp"
#include "addfeq/state_poly.hpp"

namespace addfeq {

// Per-term maximal orders of the differential-operator ansatz
//   f_i = sum_{j<=k_i} lambda_{i,j} d^j,   g_i = sum_{j<=l_i} mu_{i,j} d^j,
// with d^0 = id. Pinned functions are identity multiples, so their order is 0.
struct AnsatzSpec {
    std::vector<unsigned> f_orders;
    std::vector<unsigned> g_orders;

    // Uniform orders (k, l), clamped to 0 on pinned functions.
    static AnsatzSpec uniform(const EquationSpec& spec, unsigned k, unsigned l);

    void validate(const EquationSpec& spec) const;
};

// Coefficient assignment (i, j) -> value for one side of the ansatz.
using CoeffMap = std::map<std::pair<int, unsigned>, Rational>;

// Linear constraints on the product unknowns pi[i,k,l]: one row per state
// monomial of total degree N, linear form must vanish. Rows are grouped by
// derivative weight in the canonical monomial order; a row for a monomial of
// weight w only involves products with k + l = w.
struct ConstraintSystem {
    EquationSpec spec;
    AnsatzSpec ansatz;
    std::map<StateMonomial, LinForm, StateMonomialOrder> rows;

    std::vector<UnknownId> unknowns() const; // canonical (i, k, l) order
    std::size_t row_count() const { return rows.size(); }
};

// Expand the equation under the ansatz and collect coefficients per state
// monomial. Requires a homogeneous spec (single N).
ConstraintSystem expand_equation(const EquationSpec& spec, const AnsatzSpec& ansatz);

// Plug concrete coefficients into the products and evaluate the rows back
// into a polynomial; zero exactly when the operators solve the equation.
StatePoly instantiate(const ConstraintSystem& system, const CoeffMap& lambda,
                      const CoeffMap& mu);

// Direct expansion of sum_i coef_i * f_i(x^{p_i}) * g_i(x^{q_i}) without going
// through the constraint system; the bilinear-consistency partner of
// instantiate.
StatePoly direct_expansion(const EquationSpec& spec, const AnsatzSpec& ansatz,
                           const CoeffMap& lambda, const CoeffMap& mu);

} // namespace addfeq
