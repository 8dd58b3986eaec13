#include "addfeq/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "addfeq/dsl.hpp"
#include "addfeq/error.hpp"
#include "addfeq/leibniz.hpp"
#include "addfeq/report.hpp"
#include "addfeq/version.hpp"

namespace addfeq {

namespace {

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    require_input(in.good(), "cannot open file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const ojson& j, bool text, std::ostream& out, const std::string& text_body) {
    if (text)
        out << text_body << "\n";
    else
        out << j.dump(2) << "\n";
}

std::string describe_verdict(const ojson& cell) {
    std::string v = cell["verdict"].get<std::string>();
    std::string s = "(" + std::to_string(cell["k"].get<unsigned>()) + "," +
                    std::to_string(cell["l"].get<unsigned>()) + ") " + v;
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbolic analysis of additive-function equations "
                 "sum_i f_i(x^p_i) g_i(x^q_i) = 0"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string equation;
    bool text_mode = false;
    std::uint64_t seed = 12345;
    unsigned vars = 2;
    unsigned points = 3;

    bool json_mode = false;
    auto add_common = [&](CLI::App* cmd, bool needs_equation) {
        if (needs_equation)
            cmd->add_option("equation", equation, "equation text, e.g. \"f1(x)*g1(x^4) + f2(x^2)*g2(x^3) = 0\"")
                ->required();
        CLI::Option* text = cmd->add_flag("--text", text_mode, "human-readable text output");
        cmd->add_flag("--json", json_mode, "JSON output (the default)")->excludes(text);
    };

    CLI::App* homogenize_cmd = app.add_subcommand("homogenize", "split into homogeneous components");
    add_common(homogenize_cmd, true);

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "conditions, homogenization and order-bound scan per component");
    add_common(analyze_cmd, true);
    std::optional<unsigned> max_order;
    std::optional<int> component;
    analyze_cmd->add_option("--max-order", max_order, "scan orders 0..K (default 2n)");
    analyze_cmd->add_option("--seed", seed, "seed for oracle sample points");
    analyze_cmd->add_option("--vars", vars, "number of field variables for the oracle");
    analyze_cmd->add_option("--component", component, "restrict to one homogeneous component");

    CLI::App* expand_cmd = app.add_subcommand("expand", "print d^k applied to a p-th power or product");
    unsigned expand_k = 0, expand_p = 1;
    bool expand_product_flag = false;
    expand_cmd->add_option("--k", expand_k, "derivation order")->required();
    expand_cmd->add_option("--p", expand_p, "power / number of factors")->required();
    expand_cmd->add_flag("--product", expand_product_flag, "composition table for a product instead");
    expand_cmd->add_flag("--text", text_mode, "plain polynomial text output");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check supplied operator coefficients symbolically and in the oracle field");
    add_common(verify_cmd, true);
    std::string coeffs_path;
    bool dump_system = false;
    verify_cmd->add_option("--coeffs", coeffs_path, "JSON file with lambda/mu coefficient lists")
        ->required();
    verify_cmd->add_option("--seed", seed, "seed for oracle sample points");
    verify_cmd->add_option("--vars", vars, "number of field variables");
    verify_cmd->add_option("--points", points, "number of oracle sample points");
    verify_cmd->add_flag("--system", dump_system, "include the constraint system rows");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "evaluate residuals at random field points");
    add_common(oracle_cmd, true);
    std::string ops_path;
    oracle_cmd->add_option("--ops", ops_path, "JSON file with f/g operator lists")->required();
    oracle_cmd->add_option("--seed", seed, "seed for sample points");
    oracle_cmd->add_option("--vars", vars, "number of field variables");
    oracle_cmd->add_option("--points", points, "number of sample points");

    // CLI11's vector overload consumes arguments from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help / --version
            std::ostringstream oss;
            int code = app.exit(e, oss, oss);
            out << oss.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        auto started = std::chrono::steady_clock::now();

        if (app.got_subcommand(homogenize_cmd)) {
            std::vector<Term> terms = parse_equation(equation);
            ojson j = homogenize_report(equation, terms);
            std::string text_body = "components:";
            for (const auto& c : j["components"])
                text_body += "\n  N=" + std::to_string(c["N"].get<unsigned>()) + " with " +
                             std::to_string(c["terms"].size()) + " term(s)";
            emit(j, text_mode, out, text_body);
        } else if (app.got_subcommand(analyze_cmd)) {
            std::vector<Term> terms = parse_equation(equation);
            AnalyzeOptions options;
            options.max_order = max_order;
            options.seed = seed;
            options.vars = vars;
            options.component = component;
            ojson j = analyze_report(equation, terms, options);
            std::string text_body;
            for (const auto& c : j["components"]) {
                text_body += "component N=" + std::to_string(c["N"].get<unsigned>()) + ": ";
                const auto& analysis = c["analysis"];
                if (!analysis["admissible"].get<bool>()) {
                    text_body += "refused: " + analysis["refusal"].get<std::string>() + "\n";
                    continue;
                }
                if (analysis["certified_bound"].is_null()) {
                    text_body += "no feasible orders in the grid\n";
                } else {
                    text_body += "certified order bound k<=" +
                                 std::to_string(analysis["certified_bound"]["k"].get<unsigned>()) +
                                 ", l<=" +
                                 std::to_string(analysis["certified_bound"]["l"].get<unsigned>()) +
                                 "\n";
                }
                for (const auto& cell : analysis["grid"]) text_body += "  " + describe_verdict(cell) + "\n";
            }
            if (!text_body.empty() && text_body.back() == '\n') text_body.pop_back();
            emit(j, text_mode, out, text_body);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            err << "analyze completed in " << elapsed << " ms\n";
        } else if (app.got_subcommand(expand_cmd)) {
            if (expand_product_flag) {
                ProductExpansion pe = expand_product(expand_k, expand_p);
                ojson j;
                j["tool"] = tool_json();
                j["command"] = "expand";
                j["k"] = pe.order;
                j["p"] = pe.arity;
                ojson entries = ojson::array();
                std::string text_body;
                for (const auto& [comp, c] : pe.terms) {
                    ojson e;
                    e["composition"] = comp;
                    e["coefficient"] = c.str();
                    entries.push_back(std::move(e));
                    std::string compstr;
                    for (unsigned v : comp) compstr += (compstr.empty() ? "" : ",") + std::to_string(v);
                    text_body += "(" + compstr + "): " + c.str() + "\n";
                }
                j["compositions"] = std::move(entries);
                if (!text_body.empty()) text_body.pop_back();
                emit(j, text_mode, out, text_body);
            } else {
                const StatePoly& poly = expand_power(expand_k, expand_p);
                ojson j;
                j["tool"] = tool_json();
                j["command"] = "expand";
                j["k"] = expand_k;
                j["p"] = expand_p;
                j["power"] = render(poly);
                emit(j, text_mode, out, render(poly));
            }
        } else if (app.got_subcommand(verify_cmd)) {
            std::vector<Term> terms = parse_equation(equation);
            ojson cj = load_json_file(coeffs_path);
            require_input(cj.contains("lambda") && cj.contains("mu"),
                          "coefficient file needs 'lambda' and 'mu' arrays");
            CoeffMap lambda = coeffmap_from_json(cj["lambda"]);
            CoeffMap mu = coeffmap_from_json(cj["mu"]);
            ojson j = verify_report(equation, terms, lambda, mu, vars, seed, points, dump_system);
            std::string text_body = std::string("symbolic residual: ") +
                                    j["symbolic_residual"].get<std::string>() +
                                    (j["solved"].get<bool>() ? " (solves the equation)"
                                                             : " (does not solve the equation)");
            emit(j, text_mode, out, text_body);
        } else if (app.got_subcommand(oracle_cmd)) {
            // accepts either DSL text or the JSON form {"terms": [...]}
            std::vector<Term> terms;
            if (equation.find_first_not_of(" \t\n") != std::string::npos &&
                equation[equation.find_first_not_of(" \t\n")] == '{') {
                try {
                    terms = terms_from_json(ojson::parse(equation));
                } catch (const nlohmann::json::parse_error& e) {
                    throw input_error(std::string("invalid equation JSON: ") + e.what());
                }
            } else {
                terms = parse_equation(equation);
            }
            EquationSpec spec = EquationSpec::from_terms(terms);
            ojson oj = load_json_file(ops_path);
            require_input(oj.contains("f") && oj.contains("g"),
                          "operator file needs 'f' and 'g' arrays");
            std::vector<DiffOperator> f_ops =
                operators_from_json(oj["f"], spec.terms.size(), "f");
            std::vector<DiffOperator> g_ops =
                operators_from_json(oj["g"], spec.terms.size(), "g");
            ojson j = oracle_report(equation, terms, f_ops, g_ops, vars, seed, points);
            std::string text_body;
            for (const auto& p : j["points"])
                text_body += "x = " + p["x"].get<std::string>() +
                             "  ->  residual = " + p["residual"].get<std::string>() + "\n";
            if (!text_body.empty()) text_body.pop_back();
            emit(j, text_mode, out, text_body);
        }
        return 0;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace addfeq
