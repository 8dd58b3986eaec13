#include "addfeq/ansatz.hpp"

#include "addfeq/error.hpp"
#include "addfeq/leibniz.hpp"

namespace addfeq {

namespace {

// Expansion of one ansatz factor d^order applied to x^exponent. A pinned
// factor with exponent 0 is the constant 1 (the function evaluated at 1).
const StatePoly& side_expansion(unsigned order, unsigned exponent) {
    static const StatePoly one = StatePoly::one();
    if (exponent == 0) {
        check_invariant(order == 0, "positive order applied to constant side");
        return one;
    }
    return expand_power(order, exponent);
}

Rational coeff_for(const CoeffMap& m, int i, unsigned j) {
    auto it = m.find({i, j});
    require_input(it != m.end(), "missing coefficient for (i=" + std::to_string(i) +
                                     ", j=" + std::to_string(j) + ")");
    return it->second;
}

} // namespace

AnsatzSpec AnsatzSpec::uniform(const EquationSpec& spec, unsigned k, unsigned l) {
    AnsatzSpec a;
    for (const Term& t : spec.terms) {
        a.f_orders.push_back(t.f_pinned ? 0u : k);
        a.g_orders.push_back(t.g_pinned ? 0u : l);
    }
    return a;
}

void AnsatzSpec::validate(const EquationSpec& spec) const {
    require_input(f_orders.size() == spec.terms.size() &&
                      g_orders.size() == spec.terms.size(),
                  "ansatz orders must match the number of terms");
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        require_input(!spec.terms[i].f_pinned || f_orders[i] == 0,
                      "pinned f must have order 0");
        require_input(!spec.terms[i].g_pinned || g_orders[i] == 0,
                      "pinned g must have order 0");
        require_input(spec.terms[i].p >= 1 || f_orders[i] == 0,
                      "constant f side must have order 0");
        require_input(spec.terms[i].q >= 1 || g_orders[i] == 0,
                      "constant g side must have order 0");
    }
}

std::vector<UnknownId> ConstraintSystem::unknowns() const {
    std::vector<UnknownId> ids;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        int i = spec.terms[t].index;
        for (unsigned a = 0; a <= ansatz.f_orders[t]; ++a)
            for (unsigned b = 0; b <= ansatz.g_orders[t]; ++b)
                ids.push_back(UnknownId::product(i, static_cast<int>(a), static_cast<int>(b)));
    }
    return ids;
}

ConstraintSystem expand_equation(const EquationSpec& spec, const AnsatzSpec& ansatz) {
    require_input(spec.common_degree.has_value(),
                  "expand_equation needs a homogeneous equation (single N)");
    ansatz.validate(spec);

    ConstraintSystem system;
    system.spec = spec;
    system.ansatz = ansatz;

    const unsigned N = *spec.common_degree;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        const Term& term = spec.terms[t];
        for (unsigned a = 0; a <= ansatz.f_orders[t]; ++a) {
            const StatePoly& fa = side_expansion(a, term.p);
            for (unsigned b = 0; b <= ansatz.g_orders[t]; ++b) {
                const StatePoly& gb = side_expansion(b, term.q);
                StatePoly prod = (fa * gb).scaled(term.coef);
                UnknownId id = UnknownId::product(term.index, static_cast<int>(a),
                                                  static_cast<int>(b));
                for (const auto& [mono, c] : prod.terms()) {
                    check_invariant(mono.degree() == N, "row monomial degree mismatch");
                    check_invariant(mono.weight() == a + b, "row monomial weight mismatch");
                    auto [it, inserted] = system.rows.emplace(mono, LinForm::unknown(id, c));
                    if (!inserted) it->second += LinForm::unknown(id, c);
                }
            }
        }
    }
    // drop rows that cancelled to zero
    for (auto it = system.rows.begin(); it != system.rows.end();) {
        if (it->second.is_zero())
            it = system.rows.erase(it);
        else
            ++it;
    }
    return system;
}

StatePoly instantiate(const ConstraintSystem& system, const CoeffMap& lambda,
                      const CoeffMap& mu) {
    std::map<UnknownId, Rational> assignment;
    for (const UnknownId& id : system.unknowns())
        assignment[id] = coeff_for(lambda, id.i, static_cast<unsigned>(id.k)) *
                         coeff_for(mu, id.i, static_cast<unsigned>(id.l));

    StatePoly residual;
    for (const auto& [mono, form] : system.rows)
        residual.add_term(mono, form.evaluate(assignment));
    return residual;
}

StatePoly direct_expansion(const EquationSpec& spec, const AnsatzSpec& ansatz,
                           const CoeffMap& lambda, const CoeffMap& mu) {
    ansatz.validate(spec);
    StatePoly total;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        const Term& term = spec.terms[t];
        StatePoly f_poly, g_poly;
        for (unsigned a = 0; a <= ansatz.f_orders[t]; ++a)
            f_poly += side_expansion(a, term.p).scaled(coeff_for(lambda, term.index, a));
        for (unsigned b = 0; b <= ansatz.g_orders[t]; ++b)
            g_poly += side_expansion(b, term.q).scaled(coeff_for(mu, term.index, b));
        total += (f_poly * g_poly).scaled(term.coef);
    }
    return total;
}

} // namespace addfeq
