#include "addfeq/report.hpp"

#include "addfeq/error.hpp"
#include "addfeq/version.hpp"

namespace addfeq {

ojson tool_json() {
    ojson j;
    j["name"] = kToolName;
    j["version"] = kToolVersion;
    return j;
}

ojson term_json(const Term& t) {
    ojson j;
    j["i"] = t.index;
    j["p"] = t.p;
    j["q"] = t.q;
    if (!t.coef.is_one()) j["coef"] = t.coef.str();
    if (t.f_pinned) j["f_pinned"] = true;
    if (t.g_pinned) j["g_pinned"] = true;
    return j;
}

ojson terms_json(const std::vector<Term>& terms) {
    ojson arr = ojson::array();
    for (const Term& t : terms) arr.push_back(term_json(t));
    return arr;
}

std::vector<Term> terms_from_json(const ojson& j) {
    require_input(j.is_object() && j.contains("terms") && j["terms"].is_array(),
                  "equation JSON needs a 'terms' array");
    std::vector<Term> terms;
    for (const auto& e : j["terms"]) {
        require_input(e.contains("p") && e.contains("q"), "term entries need p and q");
        Term t;
        t.p = e["p"].get<unsigned>();
        t.q = e["q"].get<unsigned>();
        if (e.contains("coef"))
            t.coef = e["coef"].is_string() ? Rational::parse(e["coef"].get<std::string>())
                                           : Rational(e["coef"].get<long>());
        if (e.contains("f_pinned")) t.f_pinned = e["f_pinned"].get<bool>();
        if (e.contains("g_pinned")) t.g_pinned = e["g_pinned"].get<bool>();
        terms.push_back(t);
    }
    return terms;
}

ojson condition_json(const ConditionReport& rep) {
    ojson j;
    j["c1"]["pass"] = rep.c1_pass;
    if (rep.c1_offending)
        j["c1"]["offending_terms"] = {rep.c1_offending->first, rep.c1_offending->second};
    j["c2"]["pass"] = rep.c2_pass;
    j["c2"]["sums"] = rep.c2_sums;
    j["c3"]["pass"] = rep.c3_pass;
    if (rep.c3_offending)
        j["c3"]["offending_pair"] = {rep.c3_offending->first, rep.c3_offending->second};
    return j;
}

ojson constraint_system_json(const ConstraintSystem& system) {
    ojson rows = ojson::array();
    for (const auto& [mono, form] : system.rows) {
        ojson row;
        row["monomial"] = mono.str();
        ojson coeffs = ojson::array();
        for (const auto& [id, c] : form.terms()) {
            ojson e;
            e["i"] = id.i;
            e["k"] = id.k;
            e["l"] = id.l;
            e["c"] = c.str();
            coeffs.push_back(std::move(e));
        }
        row["coeffs"] = std::move(coeffs);
        rows.push_back(std::move(row));
    }
    ojson j;
    j["n"] = system.spec.n();
    if (system.spec.common_degree) j["N"] = *system.spec.common_degree;
    j["unknowns"] = system.unknowns().size();
    j["rows"] = std::move(rows);
    return j;
}

ojson coeffmap_json(const CoeffMap& m) {
    ojson arr = ojson::array();
    for (const auto& [key, value] : m) {
        ojson e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["c"] = value.str();
        arr.push_back(std::move(e));
    }
    return arr;
}

CoeffMap coeffmap_from_json(const ojson& j) {
    require_input(j.is_array(), "coefficient list must be an array");
    CoeffMap m;
    for (const auto& e : j) {
        require_input(e.contains("i") && e.contains("j") && e.contains("c"),
                      "coefficient entries need fields i, j, c");
        int i = e["i"].get<int>();
        unsigned jj = e["j"].get<unsigned>();
        Rational c = e["c"].is_string() ? Rational::parse(e["c"].get<std::string>())
                                        : Rational(e["c"].get<long>());
        m[{i, jj}] = c;
    }
    return m;
}

OracleCheck oracle_check_witness(const EquationSpec& spec, const CoeffMap& lambda,
                                 const CoeffMap& mu, unsigned vars, std::uint64_t seed,
                                 unsigned points) {
    std::vector<DiffOperator> f_ops(spec.terms.size()), g_ops(spec.terms.size());
    for (const auto& [key, value] : lambda) {
        require_input(key.first >= 1 && key.first <= spec.n(),
                      "lambda refers to term " + std::to_string(key.first));
        if (value.is_zero()) continue;
        f_ops[static_cast<std::size_t>(key.first - 1)] +=
            DiffOperator::partial_power(0, key.second, value);
    }
    for (const auto& [key, value] : mu) {
        require_input(key.first >= 1 && key.first <= spec.n(),
                      "mu refers to term " + std::to_string(key.first));
        if (value.is_zero()) continue;
        g_ops[static_cast<std::size_t>(key.first - 1)] +=
            DiffOperator::partial_power(0, key.second, value);
    }

    OracleCheck check;
    check.points = points;
    check.all_zero = true;
    for (unsigned s = 0; s < points; ++s) {
        FieldElement x = random_element(2, vars, seed + s);
        FieldElement r = residual(spec, f_ops, g_ops, x);
        check.residuals.push_back(r.str());
        check.all_zero &= r.is_zero();
    }
    return check;
}

ojson verdict_json(const FeasibilityVerdict& v) {
    ojson j;
    if (const auto* inf = std::get_if<InfeasibleCert>(&v)) {
        j["verdict"] = "infeasible";
        ojson forced = ojson::array();
        for (const UnknownId& id : inf->forced_zero) {
            ojson e;
            e["i"] = id.i;
            e["k"] = id.k;
            e["l"] = id.l;
            forced.push_back(std::move(e));
        }
        j["forced_zero"] = std::move(forced);
        if (inf->vacuous) j["vacuous"] = true;
        j["reverified"] = inf->reverified;
    } else if (const auto* w = std::get_if<WitnessFound>(&v)) {
        j["verdict"] = "witness";
        j["lambda"] = coeffmap_json(w->lambda);
        j["mu"] = coeffmap_json(w->mu);
        ojson attained = ojson::array();
        for (const UnknownId& id : w->attained) {
            ojson e;
            e["i"] = id.i;
            e["k"] = id.k;
            e["l"] = id.l;
            attained.push_back(std::move(e));
        }
        j["attained"] = std::move(attained);
    } else {
        j["verdict"] = "undetermined";
        j["reason"] = std::get<Undetermined>(v).reason;
    }
    return j;
}

namespace {

ojson input_json(const std::string& input, const std::vector<Term>& terms) {
    ojson j;
    j["equation"] = input;
    std::vector<Term> echo = terms;
    for (std::size_t i = 0; i < echo.size(); ++i) echo[i].index = static_cast<int>(i + 1);
    j["terms"] = terms_json(echo);
    return j;
}

} // namespace

ojson homogenize_report(const std::string& input, const std::vector<Term>& terms) {
    ojson j;
    j["tool"] = tool_json();
    j["command"] = "homogenize";
    j["input"] = input_json(input, terms);
    j["conditions"] = condition_json(check_conditions(EquationSpec::from_terms(terms)));
    ojson comps = ojson::array();
    for (const EquationSpec& spec : homogenize(terms)) {
        ojson c;
        c["N"] = *spec.common_degree;
        c["terms"] = terms_json(spec.terms);
        c["conditions"] = condition_json(check_conditions(spec));
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

ojson analyze_report(const std::string& input, const std::vector<Term>& terms,
                     const AnalyzeOptions& options) {
    ojson j;
    j["tool"] = tool_json();
    j["command"] = "analyze";
    j["input"] = input_json(input, terms);
    ojson opts;
    if (options.max_order) opts["max_order"] = *options.max_order;
    opts["seed"] = options.seed;
    opts["vars"] = options.vars;
    if (options.component) opts["component"] = *options.component;
    j["options"] = std::move(opts);
    j["conditions"] = condition_json(check_conditions(EquationSpec::from_terms(terms)));
    j["notes"] = ojson::array(
        {"coefficients are exact rationals; for systems with rational entries, rank and "
         "nullity over Q equal those over C, so infeasibility certificates transfer"});

    unsigned witnesses_checked = 0;
    bool oracle_all_zero = true;

    ojson comps = ojson::array();
    std::vector<EquationSpec> components = homogenize(terms);
    if (options.component)
        require_input(*options.component >= 1 &&
                          *options.component <= static_cast<int>(components.size()),
                      "component " + std::to_string(*options.component) +
                          " out of range (1.." + std::to_string(components.size()) + ")");
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        if (options.component && *options.component != static_cast<int>(ci + 1)) continue;
        const EquationSpec& spec = components[ci];
        ojson c;
        c["component"] = ci + 1;
        c["N"] = *spec.common_degree;
        c["terms"] = terms_json(spec.terms);
        ConditionReport rep = check_conditions(spec);
        c["conditions"] = condition_json(rep);

        if (!rep.c1_pass || !rep.c3_pass) {
            c["analysis"] = {{"admissible", false}, {"refusal", rep.failure_summary()}};
            comps.push_back(std::move(c));
            continue;
        }

        unsigned max_order = options.max_order
                                 ? *options.max_order
                                 : 2u * static_cast<unsigned>(spec.n());
        ScanResult scan = max_order_scan(spec, max_order, max_order);
        ojson grid = ojson::array();
        for (const ScanCell& cell : scan.cells) {
            ojson g;
            g["k"] = cell.k;
            g["l"] = cell.l;
            ojson v = verdict_json(cell.verdict);
            if (const auto* w = std::get_if<WitnessFound>(&cell.verdict)) {
                OracleCheck check = oracle_check_witness(spec, w->lambda, w->mu, options.vars,
                                                         options.seed, options.oracle_points);
                v["oracle_zero"] = check.all_zero;
                ++witnesses_checked;
                oracle_all_zero &= check.all_zero;
            }
            g.update(v);
            grid.push_back(std::move(g));
        }
        ojson analysis;
        analysis["admissible"] = true;
        analysis["grid_max"] = {{"k", scan.k_max}, {"l", scan.l_max}};
        analysis["grid"] = std::move(grid);
        if (scan.bound_k)
            analysis["certified_bound"] = {{"k", *scan.bound_k}, {"l", *scan.bound_l}};
        else
            analysis["certified_bound"] = nullptr;
        c["analysis"] = std::move(analysis);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    j["oracle"] = {{"vars", options.vars},
                   {"points_per_witness", options.oracle_points},
                   {"witnesses_checked", witnesses_checked},
                   {"all_zero", oracle_all_zero}};
    return j;
}

ojson verify_report(const std::string& input, const std::vector<Term>& terms,
                    const CoeffMap& lambda, const CoeffMap& mu, unsigned vars,
                    std::uint64_t seed, unsigned points, bool include_system) {
    EquationSpec spec = EquationSpec::from_terms(terms);
    require_input(spec.common_degree.has_value(),
                  "verify needs a homogeneous equation; run homogenize first");

    AnsatzSpec ansatz;
    for (const Term& t : spec.terms) {
        unsigned fo = 0, go = 0;
        for (const auto& [key, value] : lambda)
            if (key.first == t.index) fo = std::max(fo, key.second);
        for (const auto& [key, value] : mu)
            if (key.first == t.index) go = std::max(go, key.second);
        ansatz.f_orders.push_back(t.f_pinned ? 0u : fo);
        ansatz.g_orders.push_back(t.g_pinned ? 0u : go);
    }

    ConstraintSystem system = expand_equation(spec, ansatz);
    StatePoly residual_poly = instantiate(system, lambda, mu);

    ojson j;
    j["tool"] = tool_json();
    j["command"] = "verify";
    j["input"] = input_json(input, terms);
    j["canonical_terms"] = terms_json(spec.terms); // coefficient indices refer to these
    j["coefficients"] = {{"lambda", coeffmap_json(lambda)}, {"mu", coeffmap_json(mu)}};
    j["symbolic_residual"] = render(residual_poly);
    j["solved"] = residual_poly.is_zero();
    if (include_system) j["system"] = constraint_system_json(system);

    OracleCheck check = oracle_check_witness(spec, lambda, mu, vars, seed, points);
    ojson pts = ojson::array();
    for (unsigned s = 0; s < check.points; ++s) {
        ojson p;
        p["seed"] = seed + s;
        p["residual"] = check.residuals[s];
        pts.push_back(std::move(p));
    }
    j["oracle"] = {{"vars", vars}, {"points", std::move(pts)}, {"all_zero", check.all_zero}};
    return j;
}

ojson oracle_report(const std::string& input, const std::vector<Term>& terms,
                    const std::vector<DiffOperator>& f_ops,
                    const std::vector<DiffOperator>& g_ops, unsigned vars,
                    std::uint64_t seed, unsigned points) {
    EquationSpec spec = EquationSpec::from_terms(terms);
    ojson j;
    j["tool"] = tool_json();
    j["command"] = "oracle";
    j["input"] = input_json(input, terms);
    j["vars"] = vars;
    j["seed"] = seed;
    ojson pts = ojson::array();
    bool all_zero = true;
    for (unsigned s = 0; s < points; ++s) {
        FieldElement x = random_element(2, vars, seed + s);
        FieldElement r = residual(spec, f_ops, g_ops, x);
        ojson p;
        p["x"] = x.str();
        p["residual"] = r.str();
        p["zero"] = r.is_zero();
        all_zero &= r.is_zero();
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    j["all_zero"] = all_zero;
    return j;
}

std::vector<DiffOperator> operators_from_json(const ojson& j, std::size_t count,
                                              const std::string& side) {
    require_input(j.is_array() && j.size() == count,
                  "operator list '" + side + "' must have one entry per term");
    std::vector<DiffOperator> ops;
    for (const auto& entry : j) {
        require_input(entry.is_array(), "each operator must be an array of terms");
        DiffOperator op;
        for (const auto& t : entry) {
            require_input(t.contains("c") && t.contains("comp"),
                          "operator terms need fields c and comp");
            DiffOperator::OpTerm term;
            term.coeff = t["c"].is_string() ? Rational::parse(t["c"].get<std::string>())
                                            : Rational(t["c"].get<long>());
            for (const auto& v : t["comp"]) {
                unsigned var = v.get<unsigned>();
                require_input(var >= 1, "operator variable indices are 1-based");
                term.composition.push_back(var - 1);
            }
            op.terms.push_back(std::move(term));
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

} // namespace addfeq
