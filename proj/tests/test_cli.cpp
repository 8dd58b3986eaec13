#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "addfeq/cli.hpp"
#include "addfeq/dsl.hpp"
#include "addfeq/equation.hpp"
#include "addfeq/report.hpp"

using namespace addfeq;

namespace {

std::string run(const std::vector<std::string>& args, int expected_code = 0) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    INFO("stderr: ", err.str());
    CHECK(code == expected_code);
    return out.str();
}

const char* kRem21 =
    "f1(x^24)*g1(x^5) + f2(x^20)*g2(x^9) + f3(x^19)*g3(x^10) + f4(x^13)*g4(x^7) + "
    "f5(x^12)*g5(x^8) = 0";

} // namespace

TEST_CASE("parse_equation examples") {
    std::vector<Term> terms = parse_equation("f1(x^24)*g1(x^5) + f2(x^20)*g2(x^9) = 0");
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].p == 24);
    CHECK(terms[0].q == 5);
    CHECK(terms[1].p == 20);
    CHECK(terms[1].q == 9);

    std::vector<Term> binom = parse_equation("f1(x^2) - 2*x*f1(x) = 0");
    REQUIRE(binom.size() == 2);
    CHECK(binom[0].p == 2);
    CHECK(binom[0].q == 0);
    CHECK(binom[0].g_pinned);
    CHECK(binom[1].p == 1);
    CHECK(binom[1].q == 1);
    CHECK(binom[1].g_pinned);
    CHECK(binom[1].coef == Rational(-2));

    std::vector<Term> mixed = parse_equation("x^2*g1(x^3) + 1/2*g2(x^4)*x = 0");
    CHECK(mixed[0].f_pinned);
    CHECK(mixed[0].p == 2);
    CHECK(mixed[0].q == 3);
    CHECK(mixed[1].coef == Rational(1, 2));
    CHECK(mixed[1].p == 1);
    CHECK(mixed[1].q == 4);
}

TEST_CASE("parse errors carry 1-based columns") {
    try {
        parse_equation("f1(x^");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.column == 6);
    }

    try {
        parse_equation("f1(x^0) = 0");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.column == 6);
    }

    CHECK_THROWS_AS(parse_equation("f1(x) = 1"), parse_error);
    CHECK_THROWS_AS(parse_equation("f1(x) + = 0"), parse_error);
    CHECK_THROWS_AS(parse_equation("f1(x)*g1(x)*g2(x) = 0"), parse_error);
    CHECK_THROWS_AS(parse_equation(""), parse_error);
    CHECK_THROWS_AS(parse_equation("f1(x) = 0 trailing"), parse_error);
}

TEST_CASE("parse/print round trip over the example corpus") {
    std::vector<std::string> corpus = {
        "f1(x^24)*g1(x^5) + f2(x^20)*g2(x^9) = 0",
        kRem21,
        "f1(x^2) - 2*x*f1(x) = 0",
        "f1(x)*g1(x^4) + f2(x^2)*g2(x^3) = 0",
        "-3*f1(x)*x^2 + 3*f2(x^2)*x - f3(x^3) = 0",
        "f1(x)*g1(x^4) - 2/3*f2(x^2)*g2(x^3) = 0",
        "f1(x)*g1(x^4) - 5/9*f2(x^3)*g2(x^3) = 0",
        "f1(x^2)*g1(x^5) - 5/6*f2(x^3)*g2(x^4) = 0",
        "f1(x)*f2(x^4) - g1(x^2)*g2(x^3) = 0",
        "x*f1(x^6) + x^2*f2(x^5) + x^3*f3(x^4) = 0",
        "f1(x^13)*g1(x^7) + f2(x^12)*g2(x^8) = 0",
        "f1(x)*g1(x) = 0",
        "2*f1(x^3)*g1(x^2) - 7*f2(x^4)*g2(x) = 0",
        "f1(x^2)*g1(x^2) = 0",
        "x^4*f1(x) + f2(x^2)*x^3 = 0",
        "f1(x^5) - g1(x^5) = 0",
        "f1(x)*g1(x^6) + f2(x^2)*g2(x^5) + f3(x^3)*g3(x^4) = 0",
        "f1(x)*g1(x^8) + f2(x^4)*g2(x^5) = 0",
        "1/3*x*x^2 + f1(x)*g1(x^2) = 0",
        "f1(x^2) - 2*x*f1(x) + f2(x^3) - 3*x*f2(x^2) = 0",
        "-f1(x)*g1(x^2) = 0",
        "f1(x^7)*g1(x^3) + f2(x^6)*g2(x^4) + f3(x^2)*g3(x^8) = 0",
    };
    for (const std::string& text : corpus) {
        CAPTURE(text);
        EquationSpec spec = EquationSpec::from_terms(parse_equation(text));
        std::string printed = print_equation(spec);
        EquationSpec back = EquationSpec::from_terms(parse_equation(printed));
        CHECK(back == spec);
        // printing is a fixed point
        CHECK(print_equation(back) == printed);
    }
}

TEST_CASE("cli expand matches the documented example") {
    CHECK(run({"expand", "--k", "2", "--p", "3", "--text"}) == "3*X^2*D2 + 6*X*D1^2\n");
}

TEST_CASE("cli exit codes") {
    std::ostringstream out, err;
    CHECK(run_cli({"analyze", "f1(x^"}, out, err) == 1);
    CHECK(err.str().find("column 6") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(run_cli({"expand", "--k", "80", "--p", "80"}, out2, err2) == 1);

    std::ostringstream out3, err3;
    CHECK(run_cli({"verify", "f1(x)*g1(x) = 0", "--coeffs", "/nonexistent.json"}, out3,
                  err3) == 1);

    std::ostringstream out4, err4;
    CHECK(run_cli({"nonsense"}, out4, err4) == 1);
}

TEST_CASE("analyze reports are byte-identical across runs") {
    std::vector<std::string> args = {"analyze", "f1(x)*g1(x^4) + f2(x^2)*g2(x^3) = 0",
                                     "--max-order", "3"};
    std::string first = run(args);
    std::string second = run(args);
    CHECK(first == second);
    CHECK(first.find("\"certified_bound\": {") != std::string::npos);
}

TEST_CASE("homogenize report matches the frozen golden file") {
    std::string got = run({"homogenize", kRem21});
    std::ifstream in(std::string(ADDFEQ_GOLDEN_DIR) + "/rem21_homogenize.json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(got == buf.str());
}

TEST_CASE("verify subcommand round trip through a coefficient file") {
    std::string dir = "cli_test_tmp";
    std::string path = dir + "_coeffs.json";
    {
        std::ofstream f(path);
        f << R"({"lambda":[{"i":1,"j":0,"c":"0"},{"i":1,"j":1,"c":"1"},
                            {"i":2,"j":0,"c":"0"},{"i":2,"j":1,"c":"1"}],
                  "mu":[{"i":1,"j":0,"c":"1"},{"i":2,"j":0,"c":"1"}]})";
    }
    std::string out = run({"verify", "f1(x^2) - 2*x*f1(x) = 0", "--coeffs", path});
    CHECK(out.find("\"solved\": true") != std::string::npos);
    CHECK(out.find("\"all_zero\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("constraint system JSON has the documented row shape") {
    EquationSpec spec = EquationSpec::from_terms(parse_equation("f1(x)*g1(x) = 0"));
    ConstraintSystem sys = expand_equation(spec, AnsatzSpec::uniform(spec, 1, 1));
    ojson j = constraint_system_json(sys);
    CHECK(j["n"] == 1);
    CHECK(j["N"] == 2);
    CHECK(j["unknowns"] == 4);
    REQUIRE(j["rows"].is_array());
    REQUIRE(j["rows"].size() == 3);
    // rows follow the canonical monomial order: weight descending
    CHECK(j["rows"][0]["monomial"] == "D1^2");
    CHECK(j["rows"][1]["monomial"] == "X*D1");
    CHECK(j["rows"][2]["monomial"] == "X^2");
    for (const auto& row : j["rows"]) {
        CHECK(row.contains("monomial"));
        for (const auto& c : row["coeffs"]) {
            CHECK(c.contains("i"));
            CHECK(c.contains("k"));
            CHECK(c.contains("l"));
            CHECK(c["c"].is_string());
        }
    }
    CHECK(j["rows"][1]["coeffs"].size() == 2); // pi[1,0,1] + pi[1,1,0]
}

TEST_CASE("analyze report structure matches the documented schema") {
    std::string out = run({"analyze", "f1(x)*g1(x^4) + f2(x^2)*g2(x^3) = 0",
                           "--max-order", "2"});
    ojson j = ojson::parse(out);
    CHECK(j["tool"]["name"] == "addfeq");
    CHECK(j["tool"]["version"].is_string());
    CHECK(j["command"] == "analyze");
    CHECK(j["input"]["equation"].is_string());
    CHECK(j["input"]["terms"].is_array());
    CHECK(j["options"]["seed"].is_number());
    CHECK(j["conditions"]["c1"]["pass"].is_boolean());
    CHECK(j["conditions"]["c2"]["sums"].is_array());
    CHECK(j["notes"].is_array());
    REQUIRE(j["components"].is_array());
    const auto& comp = j["components"][0];
    CHECK(comp["N"] == 5);
    CHECK(comp["analysis"]["admissible"] == true);
    CHECK(comp["analysis"]["certified_bound"]["k"] == 1);
    CHECK(comp["analysis"]["certified_bound"]["l"] == 1);
    for (const auto& cell : comp["analysis"]["grid"]) {
        CHECK(cell.contains("k"));
        CHECK(cell.contains("l"));
        std::string verdict = cell["verdict"].get<std::string>();
        if (verdict == "infeasible") {
            CHECK(cell["forced_zero"].is_array());
            CHECK(cell["reverified"] == true);
        } else if (verdict == "witness") {
            CHECK(cell["lambda"].is_array());
            CHECK(cell["mu"].is_array());
            CHECK(cell["oracle_zero"] == true);
        }
    }
    CHECK(j["oracle"]["all_zero"] == true);
    CHECK(j["oracle"]["witnesses_checked"].get<unsigned>() > 0);
}

TEST_CASE("analyze respects --component and refuses inadmissible components") {
    // components follow first occurrence in the input: 1 -> N=5, 2 -> N=2
    std::string out = run({"analyze", "f1(x^2)*g1(x^3) + f2(x)*g2(x) = 0",
                           "--component", "2", "--max-order", "1"});
    ojson j = ojson::parse(out);
    REQUIRE(j["components"].size() == 1);
    CHECK(j["components"][0]["N"] == 2);

    // duplicate p inside one component: scan refused, expansion data still fine
    std::string out2 = run({"analyze", "f1(x^2)*g1(x^3) + f2(x^2)*g2(x^3) = 0"});
    ojson j2 = ojson::parse(out2);
    CHECK(j2["components"][0]["analysis"]["admissible"] == false);
    CHECK(j2["components"][0]["analysis"]["refusal"].get<std::string>().find("C(i)") !=
          std::string::npos);

    // cross collision p_i = q_j: the bound analyzer refuses without C(iii)
    std::string out3 = run({"analyze", "f1(x)*g1(x^4) + f2(x^4)*g2(x) = 0"});
    ojson j3 = ojson::parse(out3);
    CHECK(j3["components"][0]["analysis"]["admissible"] == false);
    CHECK(j3["components"][0]["analysis"]["refusal"].get<std::string>().find("C(iii)") !=
          std::string::npos);

    std::ostringstream out4, err4;
    CHECK(run_cli({"analyze", "f1(x)*g1(x) = 0", "--component", "9"}, out4, err4) == 1);
}

TEST_CASE("verify --system embeds the constraint rows") {
    std::string path = "cli_test_tmp_sys_coeffs.json";
    {
        std::ofstream f(path);
        f << R"({"lambda":[{"i":1,"j":0,"c":"1"}],"mu":[{"i":1,"j":0,"c":"1"}]})";
    }
    std::string out = run({"verify", "f1(x)*g1(x) = 0", "--coeffs", path, "--system"});
    ojson j = ojson::parse(out);
    CHECK(j["system"]["rows"].is_array());
    CHECK(j["solved"] == false); // x * x = x^2 is not identically zero
    std::remove(path.c_str());
}

TEST_CASE("oracle subcommand evaluates residuals at sampled points") {
    std::string path = "cli_test_tmp_ops.json";
    {
        std::ofstream f(path);
        // f_i = d1, g_i: first term d2, second term -2/3 d2  (kappa pair)
        f << R"({"f":[[{"c":"1","comp":[1]}],[{"c":"-2/3","comp":[1]}]],
                  "g":[[{"c":"1","comp":[2]}],[{"c":"1","comp":[2]}]]})";
    }
    std::string out =
        run({"oracle", "f1(x)*g1(x^4) + f2(x^2)*g2(x^3) = 0", "--ops", path, "--points", "4"});
    CHECK(out.find("\"all_zero\": true") != std::string::npos);

    // the JSON equation form is accepted as well and gives the same residuals
    std::string out_json =
        run({"oracle", R"({"terms":[{"i":1,"p":1,"q":4},{"i":2,"p":2,"q":3}]})", "--ops",
             path, "--points", "4"});
    ojson a = ojson::parse(out), b = ojson::parse(out_json);
    CHECK(a["points"] == b["points"]);
    CHECK(b["all_zero"] == true);
    std::remove(path.c_str());
}
