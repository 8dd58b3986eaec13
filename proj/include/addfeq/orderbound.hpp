#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addfeq/ansatz.hpp"
#include "addfeq/equation.hpp"
#include "addfeq/matrix.hpp"

namespace addfeq {

// ---------------------------------------------------------------------------
// Coefficient matrices behind the top-order contradiction argument.
//
//   case1: rows r = 1..depth of ff(p_i, r) * q_i          (k < l)
//   case2: rows r = 1..depth of ff(p_i, r) * ff(q_i, r)   (k = l)
//   case3: rows r = 1..depth of p_i^r * q_i               (k > l)
//
// where ff is the falling factorial; all are Vandermonde-like in the p_i.

enum class VandermondeKind { case1, case2, case3 };

ExactMatrix vandermonde_system(const std::vector<unsigned>& p,
                               const std::vector<unsigned>& q, unsigned depth,
                               VandermondeKind kind);

// Binomial-product rows ff(p_i, a) * ff(q_i, b) over all order pairs with
// 2 <= a + b <= n + 1; the rank-n claim for this family is checked
// experimentally, never assumed.
ExactMatrix binomial_product_matrix(const std::vector<unsigned>& p,
                                  const std::vector<unsigned>& q);

// ---------------------------------------------------------------------------
// Feasibility of joint top orders (k, l).

struct InfeasibleCert {
    std::vector<UnknownId> forced_zero; // the top products pi[i,k,l]
    bool vacuous = false;  // no term can even carry the requested orders
    bool reverified = false;
};

struct WitnessFound {
    CoeffMap lambda;
    CoeffMap mu;
    std::vector<UnknownId> attained; // top products with nonzero value
};

struct Undetermined {
    std::string reason;
};

using FeasibilityVerdict = std::variant<InfeasibleCert, WitnessFound, Undetermined>;

bool is_infeasible(const FeasibilityVerdict& v);

// Builds the full constraint system at uniform orders (k, l), computes its
// nullspace in product space, and decides whether some term can have f-order
// exactly k and g-order exactly l simultaneously. Requires all three
// admissibility conditions.
FeasibilityVerdict top_order_feasible(const EquationSpec& spec, unsigned k, unsigned l);

// Per-term order pairs (k_i, l_i) with a common k_i + l_i are not decided by
// this engine; the verdict is honestly Undetermined.
FeasibilityVerdict top_order_feasible_multi(
    const EquationSpec& spec, const std::vector<std::pair<unsigned, unsigned>>& orders);

// Independent check of an Infeasible verdict: appending pi[i,k,l] = 1 to the
// system must make it inconsistent, for every i. With full_system the rank
// computations run on the entire constraint matrix; otherwise on the one
// weight layer that can involve the top products (the rest of the system is
// homogeneous and untouched by the extra constraint).
bool reverify_infeasible(const EquationSpec& spec, unsigned k, unsigned l,
                         bool full_system = false);

struct ScanCell {
    unsigned k = 0;
    unsigned l = 0;
    FeasibilityVerdict verdict;
};

struct ScanResult {
    unsigned k_max = 0;
    unsigned l_max = 0;
    std::vector<ScanCell> cells; // k outer, l inner
    std::optional<unsigned> bound_k; // largest k with a cell not infeasible
    std::optional<unsigned> bound_l;
};

ScanResult max_order_scan(const EquationSpec& spec, unsigned k_max, unsigned l_max);

// ---------------------------------------------------------------------------
// Constraint-system plumbing shared with the scanner and the tests.

struct WeightBlock {
    unsigned weight = 0;
    std::vector<UnknownId> unknowns; // products with k + l == weight
    ExactMatrix matrix;              // rows: monomials of that weight
};

std::vector<WeightBlock> weight_blocks(const ConstraintSystem& system);

ExactMatrix full_matrix(const ConstraintSystem& system,
                        const std::vector<UnknownId>& columns);

// Nullspace of the whole system, one sparse vector per basis element.
std::vector<std::map<UnknownId, Rational>> system_nullspace(const ConstraintSystem& system);

// ---------------------------------------------------------------------------
// Named families.

// sum_i lambda_i f(x^i) x^{N-i} = 0 with lambda_i = (-1)^i binom(n, i) and
// f = d^{n-1}; the sharpness example for the n-1 bound. For n = 1 the only
// admissible f is the zero map.
struct BinomialFamily {
    EquationSpec spec; // g pinned to identity multiples
    CoeffMap lambda;
    CoeffMap mu;
    unsigned f_order = 0;
};

BinomialFamily binomial_family(unsigned n, unsigned N);

// f(x^p) g(x^{N-p}) - kappa f(x^q) g(x^{N-q}) = 0
EquationSpec kappa_spec(unsigned p, unsigned q, unsigned N, const Rational& kappa);

// The constant kappa for which f = d1, g = d2 solves kappa_spec.
Rational kappa_constant(unsigned p, unsigned q, unsigned N);

// For f(x^p) f(x^{N-p}) = g(x^q) g(x^{N-q}) with f = d and g = alpha d, the
// expansion forces alpha^2 = p(N-p)/(q(N-q)). A first-power constant
// alpha = p(N-p)/(q(N-q)) is consistent only when that ratio equals 1; the
// report carries the flag instead of asserting either value.
struct AlphaConstraintReport {
    unsigned p = 0;
    unsigned q = 0;
    unsigned N = 0;
    Rational ratio;                 // p(N-p)/(q(N-q)), derived by expansion
    bool first_power_valid = false; // ratio == 1
    std::string note;
};

AlphaConstraintReport alpha_constraint(unsigned p, unsigned q, unsigned N);

} // namespace addfeq
