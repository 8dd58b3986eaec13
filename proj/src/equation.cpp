#include "addfeq/equation.hpp"

#include <algorithm>
#include <set>

#include "addfeq/error.hpp"

namespace addfeq {

EquationSpec EquationSpec::from_terms(std::vector<Term> ts) {
    require_input(!ts.empty(), "equation needs at least one term");
    for (const Term& t : ts) {
        require_input(t.p >= 1 || t.f_pinned, "inner exponent p must be >= 1");
        require_input(t.q >= 1 || t.g_pinned, "inner exponent q must be >= 1");
        require_input(!t.coef.is_zero(), "term with zero coefficient");
    }
    std::stable_sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });
    EquationSpec spec;
    spec.terms = std::move(ts);
    for (int i = 0; i < spec.n(); ++i) spec.terms[i].index = i + 1;

    bool homogeneous = true;
    unsigned N = spec.terms.front().total_degree();
    for (const Term& t : spec.terms) homogeneous &= (t.total_degree() == N);
    if (homogeneous) spec.common_degree = N;
    return spec;
}

ConditionReport check_conditions(const EquationSpec& spec) {
    require_input(!spec.terms.empty(), "empty equation");
    ConditionReport rep;

    rep.c1_pass = true;
    for (int i = 0; i + 1 < spec.n() && rep.c1_pass; ++i) {
        if (spec.terms[i].p == spec.terms[i + 1].p) {
            rep.c1_pass = false;
            rep.c1_offending = {spec.terms[i].index, spec.terms[i + 1].index};
        }
    }

    std::set<unsigned> sums;
    for (const Term& t : spec.terms) sums.insert(t.total_degree());
    rep.c2_sums.assign(sums.begin(), sums.end());
    rep.c2_pass = sums.size() == 1;

    rep.c3_pass = true;
    for (int i = 0; i < spec.n() && rep.c3_pass; ++i) {
        for (int j = 0; j < spec.n(); ++j) {
            if (i == j) continue;
            if (spec.terms[i].p == spec.terms[j].q) {
                rep.c3_pass = false;
                rep.c3_offending = {spec.terms[i].index, spec.terms[j].index};
                break;
            }
        }
    }
    return rep;
}

std::string ConditionReport::failure_summary() const {
    std::string s;
    if (!c1_pass) {
        s += "C(i) fails";
        if (c1_offending)
            s += " (terms " + std::to_string(c1_offending->first) + " and " +
                 std::to_string(c1_offending->second) + " share p)";
    }
    if (!c2_pass) {
        if (!s.empty()) s += "; ";
        s += "C(ii) fails (" + std::to_string(c2_sums.size()) + " distinct degrees)";
    }
    if (!c3_pass) {
        if (!s.empty()) s += "; ";
        s += "C(iii) fails";
        if (c3_offending)
            s += " (p of term " + std::to_string(c3_offending->first) + " equals q of term " +
                 std::to_string(c3_offending->second) + ")";
    }
    return s.empty() ? "all conditions pass" : s;
}

std::vector<EquationSpec> homogenize(const std::vector<Term>& terms) {
    require_input(!terms.empty(), "equation needs at least one term");
    std::vector<unsigned> degrees;            // in order of first occurrence
    std::vector<std::vector<Term>> groups;
    for (const Term& t : terms) {
        unsigned d = t.total_degree();
        auto it = std::find(degrees.begin(), degrees.end(), d);
        if (it == degrees.end()) {
            degrees.push_back(d);
            groups.emplace_back();
            groups.back().push_back(t);
        } else {
            groups[static_cast<std::size_t>(it - degrees.begin())].push_back(t);
        }
    }
    std::vector<EquationSpec> specs;
    specs.reserve(groups.size());
    for (auto& g : groups) specs.push_back(EquationSpec::from_terms(std::move(g)));
    return specs;
}

} // namespace addfeq
