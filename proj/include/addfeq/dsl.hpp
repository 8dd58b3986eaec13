#pragma once

#include <string>
#include <vector>

#include "addfeq/equation.hpp"
#include "addfeq/error.hpp"

namespace addfeq {

// Syntax error with a 1-based position in the input line.
struct parse_error : input_error {
    parse_error(const std::string& what, std::size_t column_)
        : input_error("syntax error at column " + std::to_string(column_) + ": " + what),
          column(column_) {}

    std::size_t column;
};

// Equation DSL:
//   equation := sum "=" "0"
//   sum      := ["-"] term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := int ["/" int]                     -- constant coefficient
//             | ("f"|"g") int "(" "x" ["^" int] ")"
//             | "x" ["^" int]                     -- pinned identity-multiple
//
// A term carries at most two function/identity slots; a lone function factor
// leaves the other side pinned with exponent 0 (a constant factor). Explicit
// exponent 0 is rejected.
std::vector<Term> parse_equation(const std::string& text);

// Canonical rendering; parse_equation(print_equation(spec)) == spec.terms.
std::string print_equation(const EquationSpec& spec);

} // namespace addfeq
