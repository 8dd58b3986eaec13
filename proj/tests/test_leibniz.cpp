#include <doctest.h>

#include <thread>
#include <vector>

#include "addfeq/combinatorics.hpp"
#include "addfeq/error.hpp"
#include "addfeq/leibniz.hpp"

using namespace addfeq;

TEST_CASE("expand_power examples") {
    CHECK(render(expand_power(1, 2)) == "2*X*D1");
    CHECK(render(expand_power(2, 2)) == "2*X*D2 + 2*D1^2");
    CHECK(render(expand_power(2, 3)) == "3*X^2*D2 + 6*X*D1^2");
    CHECK(render(expand_power(0, 5)) == "X^5");
}

TEST_CASE("expand_power_recursive examples") {
    CHECK(expand_power_recursive(2, 2) == parse_state_poly("2*X*D2 + 2*D1^2"));
    CHECK(expand_power_recursive(3, 2) == parse_state_poly("2*X*D3 + 6*D1*D2"));
    CHECK(render(expand_power_recursive(1, 1)) == "D1");
}

TEST_CASE("the closed formula and the recursive derivation agree, k <= 6, p <= 6") {
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned p = 1; p <= 6; ++p)
            CHECK(expand_power(k, p) == expand_power_recursive(k, p));
}

TEST_CASE("grading: weight k and degree p on every monomial") {
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned p = 1; p <= 6; ++p)
            for (const auto& [m, c] : expand_power(k, p).terms()) {
                CHECK(m.weight() == k);
                CHECK(m.degree() == p);
            }
}

TEST_CASE("coefficient sum is p^k (Euler operator model)") {
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned p = 1; p <= 6; ++p) {
            mpz_class expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), p, k);
            CHECK(eval_all_ones(expand_power(k, p)) == Rational(expected));
        }
}

TEST_CASE("expand_product examples") {
    ProductExpansion e = expand_product(2, 2);
    CHECK(e.terms.size() == 3);
    CHECK(e.terms.at({2, 0}) == Rational(1));
    CHECK(e.terms.at({0, 2}) == Rational(1));
    CHECK(e.terms.at({1, 1}) == Rational(2));

    ProductExpansion e13 = expand_product(1, 3);
    CHECK(e13.terms.size() == 3);
    CHECK(e13.terms.at({1, 0, 0}) == Rational(1));
    CHECK(e13.terms.at({0, 1, 0}) == Rational(1));
    CHECK(e13.terms.at({0, 0, 1}) == Rational(1));

    ProductExpansion e02 = expand_product(0, 2);
    CHECK(e02.terms.size() == 1);
    CHECK(e02.terms.at({0, 0}) == Rational(1));
}

TEST_CASE("composition count is binom(k+p-1, p-1)") {
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned p = 1; p <= 6; ++p)
            CHECK(expand_product(k, p).terms.size() == binomial(k + p - 1, p - 1).get_ui());
}

TEST_CASE("every multinomial in an expansion matches multinomial()") {
    ProductExpansion e = expand_product(4, 3);
    for (const auto& [comp, c] : e.terms) CHECK(c == multinomial(4, comp));
}

TEST_CASE("bell expansion and the single-derivation substitution") {
    // alpha = (1): a single first derivative
    MultiDerivPoly b1 = bell_expand(MultiIndex{1}, 1);
    CHECK(collapse_single(b1) == parse_state_poly("D1"));

    // alpha = (2) on x^2 equals d^2(x^2)
    CHECK(collapse_single(bell_expand(MultiIndex{2}, 2)) == expand_power(2, 2));

    // mixed derivations collapse to the same image as a single one
    CHECK(collapse_single(bell_expand(MultiIndex{1, 1}, 2)) ==
          collapse_single(bell_expand(MultiIndex{2}, 2)));
    CHECK(collapse_single(bell_expand(MultiIndex{1, 1, 1}, 3)) ==
          collapse_single(bell_expand(MultiIndex{3}, 3)));

    // distinct derivations stay distinct before the substitution
    MultiDerivPoly mixed = bell_expand(MultiIndex{1, 1}, 2);
    bool has_cross_term = false;
    for (const auto& [m, c] : mixed.terms())
        for (const auto& [beta, j] : m.d_exps)
            if (beta == MultiIndex{1, 1}) has_cross_term = true;
    CHECK(has_cross_term);
}

TEST_CASE("memoized expansions are identical under concurrent access") {
    std::vector<StatePoly> results(8);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < 8; ++w)
        workers.emplace_back([&results, w] {
            StatePoly acc;
            for (unsigned k = 0; k <= 7; ++k)
                for (unsigned p = 1; p <= 7; ++p) acc += expand_power(k, p);
            results[w] = std::move(acc);
        });
    for (auto& t : workers) t.join();
    for (unsigned w = 1; w < 8; ++w) CHECK(results[w] == results[0]);
}

TEST_CASE("expansion caps produce clear input errors") {
    LeibnizLimits saved = leibniz_limits();
    LeibnizLimits tight = saved;
    tight.max_order = 4;
    set_leibniz_limits(tight);
    CHECK_THROWS_AS(expand_power(5, 2), input_error);
    CHECK_THROWS_AS(expand_product(5, 2), input_error);
    set_leibniz_limits(saved);
    CHECK_THROWS_AS(expand_power(1, 0), input_error);

    LeibnizLimits few = saved;
    few.max_compositions = 10;
    set_leibniz_limits(few);
    CHECK_THROWS_AS(expand_product(6, 6), input_error);
    set_leibniz_limits(saved);
}
