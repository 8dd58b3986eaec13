#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addfeq/equation.hpp"
#include "addfeq/mpoly.hpp"
#include "addfeq/multi_index.hpp"
#include "addfeq/rational.hpp"

namespace addfeq {

// Element of Q(t1,...,tm): a reduced fraction of polynomials with monic
// denominator. The concrete model in which candidate solutions are checked
// independently of the symbolic engine.
class FieldElement {
public:
    FieldElement() : num_(), den_(Rational(1)) {}
    FieldElement(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    FieldElement(MPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    FieldElement(MPoly num, MPoly den);

    static FieldElement variable(unsigned idx) { return FieldElement(MPoly::variable(idx)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    FieldElement pow(unsigned e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void reduce();

    MPoly num_;
    MPoly den_;
};

// d/dt_i by the quotient rule; exact, and a derivation on the field.
FieldElement partial(unsigned var, const FieldElement& e);

// Finite linear combination of compositions of partial derivations; the
// empty composition is the identity.
struct DiffOperator {
    struct OpTerm {
        Rational coeff;
        std::vector<unsigned> composition; // variable indices, applied right to left
    };

    std::vector<OpTerm> terms;

    static DiffOperator zero() { return {}; }
    static DiffOperator identity(Rational c = Rational(1));
    // c * d_{var}^k
    static DiffOperator partial_power(unsigned var, unsigned k, Rational c = Rational(1));

    DiffOperator scaled(const Rational& s) const;
    DiffOperator& operator+=(const DiffOperator& o);
};

FieldElement apply_operator(const DiffOperator& op, const FieldElement& e);

// sum_i coef_i * f_i(x^{p_i}) * g_i(x^{q_i}) evaluated at the field point x.
FieldElement residual(const EquationSpec& spec, const std::vector<DiffOperator>& f_ops,
                      const std::vector<DiffOperator>& g_ops, const FieldElement& x);

// Difference operators along field addition. Application order is
// irrelevant: the operators commute.
struct DeltaStack {
    std::vector<FieldElement> increments;

    // (Delta_{y_1} ... Delta_{y_m} F)(x) for F a trace function of one
    // argument.
    template <class F>
    FieldElement apply(F&& trace, const FieldElement& x) const {
        const std::size_t m = increments.size();
        FieldElement acc;
        for (std::size_t mask = 0; mask < (1u << m); ++mask) {
            FieldElement point = x;
            unsigned bits = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (mask & (1u << j)) {
                    point = point + increments[j];
                    ++bits;
                }
            }
            FieldElement val = trace(point);
            if ((m - bits) % 2 == 1) val = -val;
            acc = acc + val;
        }
        return acc;
    }
};

// With the trace A*(x) = d(x)^n of the symmetric n-additive map
// A(x_1,...,x_n) = d(x_1)...d(x_n), checks that m-fold differencing along y
// yields n! * d(y)^n when m = n, and 0 when m > n.
bool polarization_check(unsigned n, unsigned d_var, const FieldElement& x,
                        const FieldElement& y, unsigned m_steps);

inline bool polarization_check(unsigned n, unsigned d_var, const FieldElement& x,
                               const FieldElement& y) {
    return polarization_check(n, d_var, x, y, n);
}

// phi_alpha = d^alpha over the given partial derivations; verifies the
// multiplicative moment identity
//   phi_alpha(x y) = sum_{beta <= alpha} binom(alpha, beta) phi_beta(x)
//                    phi_{alpha - beta}(y).
bool moment_check(const MultiIndex& alpha, const std::vector<unsigned>& derivation_vars,
                  const FieldElement& x, const FieldElement& y);

// Limit on the number of symmetrization points (factorial cost).
inline constexpr unsigned kMaxSymmetrizationPoints = 10;

// (1/N!) sum over permutations sigma of sum_i coef_i *
// f_i(x_{sigma(1)}...x_{sigma(p_i)}) * g_i(x_{sigma(p_i+1)}...x_{sigma(N)});
// zero whenever (f, g) solves the equation.
FieldElement symmetrized_residual(const EquationSpec& spec,
                                  const std::vector<DiffOperator>& f_ops,
                                  const std::vector<DiffOperator>& g_ops,
                                  const std::vector<FieldElement>& points);

// Deterministic pseudo-random polynomial in t1..tm of total degree at most
// max_degree, with integer coefficients in [-20, 20]; never identically zero.
FieldElement random_element(unsigned max_degree, unsigned m, std::uint64_t seed);

} // namespace addfeq
