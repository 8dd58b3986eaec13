#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "addfeq/ansatz.hpp"
#include "addfeq/diffield.hpp"
#include "addfeq/equation.hpp"
#include "addfeq/orderbound.hpp"

namespace addfeq {

using ojson = nlohmann::ordered_json;

ojson tool_json();
ojson term_json(const Term& t);
ojson terms_json(const std::vector<Term>& terms);
// inverse of the {"terms": [{"i","p","q",...}]} form
std::vector<Term> terms_from_json(const ojson& j);
ojson condition_json(const ConditionReport& rep);
ojson constraint_system_json(const ConstraintSystem& system);
ojson coeffmap_json(const CoeffMap& m);
CoeffMap coeffmap_from_json(const ojson& j);

struct OracleCheck {
    unsigned points = 0;
    bool all_zero = false;
    std::vector<std::string> residuals;
};

// Evaluate a witness in the concrete field: f_i = sum_j lambda[i,j] d1^j and
// g_i = sum_j mu[i,j] d1^j at `points` pseudo-random elements of
// Q(t1,...,t_vars).
OracleCheck oracle_check_witness(const EquationSpec& spec, const CoeffMap& lambda,
                                 const CoeffMap& mu, unsigned vars, std::uint64_t seed,
                                 unsigned points);

ojson verdict_json(const FeasibilityVerdict& v);

struct AnalyzeOptions {
    std::optional<unsigned> max_order; // default 2n per component
    std::uint64_t seed = 12345;
    unsigned vars = 2;
    std::optional<int> component; // 1-based filter
    unsigned oracle_points = 3;
};

ojson homogenize_report(const std::string& input, const std::vector<Term>& terms);
ojson analyze_report(const std::string& input, const std::vector<Term>& terms,
                     const AnalyzeOptions& options);
ojson verify_report(const std::string& input, const std::vector<Term>& terms,
                    const CoeffMap& lambda, const CoeffMap& mu, unsigned vars,
                    std::uint64_t seed, unsigned points, bool include_system = false);
ojson oracle_report(const std::string& input, const std::vector<Term>& terms,
                    const std::vector<DiffOperator>& f_ops,
                    const std::vector<DiffOperator>& g_ops, unsigned vars,
                    std::uint64_t seed, unsigned points);

std::vector<DiffOperator> operators_from_json(const ojson& j, std::size_t count,
                                              const std::string& side);

} // namespace addfeq
