#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "addfeq/equation.hpp"
#include "addfeq/error.hpp"

using namespace addfeq;

namespace {

Term mk(unsigned p, unsigned q) {
    Term t;
    t.p = p;
    t.q = q;
    return t;
}

} // namespace

TEST_CASE("canonical sorting and reindexing") {
    EquationSpec spec = EquationSpec::from_terms({mk(24, 5), mk(20, 9)});
    CHECK(spec.terms[0].p == 20);
    CHECK(spec.terms[0].index == 1);
    CHECK(spec.terms[1].p == 24);
    CHECK(spec.terms[1].index == 2);
    CHECK(spec.common_degree == 29u);

    CHECK(!EquationSpec::from_terms({mk(1, 1), mk(2, 3)}).common_degree.has_value());
    CHECK_THROWS_AS(EquationSpec::from_terms({}), input_error);
    CHECK_THROWS_AS(EquationSpec::from_terms({mk(0, 5)}), input_error);
}

TEST_CASE("check_conditions examples") {
    ConditionReport r1 = check_conditions(EquationSpec::from_terms({mk(1, 4), mk(2, 3)}));
    CHECK(r1.all_pass());
    CHECK(r1.c2_sums == std::vector<unsigned>{5});

    ConditionReport r2 =
        check_conditions(EquationSpec::from_terms({mk(19, 10), mk(20, 9), mk(24, 5)}));
    CHECK(r2.all_pass());
    CHECK(r2.c2_sums == std::vector<unsigned>{29});

    ConditionReport r3 = check_conditions(EquationSpec::from_terms({mk(1, 4), mk(4, 1)}));
    CHECK(r3.c1_pass);
    CHECK(r3.c2_pass);
    CHECK(!r3.c3_pass);
    REQUIRE(r3.c3_offending.has_value());
    CHECK(r3.c3_offending->first == 1);  // p_1 = 1 equals q_2 = 1
    CHECK(r3.c3_offending->second == 2);
}

TEST_CASE("duplicate p fails C(i) with a witness") {
    ConditionReport r = check_conditions(EquationSpec::from_terms({mk(2, 3), mk(2, 3)}));
    CHECK(!r.c1_pass);
    REQUIRE(r.c1_offending.has_value());
    CHECK(r.c1_offending->first == 1);
    CHECK(r.c1_offending->second == 2);
}

TEST_CASE("heterogeneous degrees fail C(ii) listing the sums") {
    ConditionReport r = check_conditions(EquationSpec::from_terms({mk(1, 1), mk(2, 3)}));
    CHECK(!r.c2_pass);
    CHECK(r.c2_sums == std::vector<unsigned>{2, 5});
}

TEST_CASE("homogenize splits the five-term example into N=29 and N=20") {
    std::vector<Term> terms = {mk(24, 5), mk(20, 9), mk(19, 10), mk(13, 7), mk(12, 8)};
    std::vector<EquationSpec> specs = homogenize(terms);
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].common_degree == 29u);
    CHECK(specs[0].terms.size() == 3);
    CHECK(specs[0].terms[0].p == 19);
    CHECK(specs[0].terms[1].p == 20);
    CHECK(specs[0].terms[2].p == 24);
    CHECK(specs[1].common_degree == 20u);
    CHECK(specs[1].terms.size() == 2);
    CHECK(specs[1].terms[0].p == 12);
    CHECK(specs[1].terms[1].p == 13);
    for (const EquationSpec& s : specs) CHECK(check_conditions(s).c2_pass);
}

TEST_CASE("homogenize trivial cases") {
    CHECK(homogenize({mk(1, 4), mk(2, 3)}).size() == 1);

    std::vector<EquationSpec> two = homogenize({mk(1, 1), mk(2, 3)});
    REQUIRE(two.size() == 2);
    CHECK(two[0].common_degree == 2u);
    CHECK(two[1].common_degree == 5u);
}

TEST_CASE("homogenize is a partition of the input pairs") {
    std::uint64_t state = 777;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Term> terms;
        unsigned count = 1 + static_cast<unsigned>(next() % 7);
        for (unsigned i = 0; i < count; ++i)
            terms.push_back(mk(1 + static_cast<unsigned>(next() % 9),
                               1 + static_cast<unsigned>(next() % 9)));

        std::vector<std::pair<unsigned, unsigned>> input;
        for (const Term& t : terms) input.emplace_back(t.p, t.q);
        std::sort(input.begin(), input.end());

        std::vector<std::pair<unsigned, unsigned>> output;
        for (const EquationSpec& s : homogenize(terms)) {
            CHECK(s.common_degree.has_value()); // C(ii) holds by construction
            for (const Term& t : s.terms) output.emplace_back(t.p, t.q);
        }
        std::sort(output.begin(), output.end());
        CHECK(input == output);
    }
}

TEST_CASE("check_conditions is order-insensitive") {
    std::vector<Term> a = {mk(1, 6), mk(3, 4), mk(2, 5)};
    std::vector<Term> b = {mk(3, 4), mk(2, 5), mk(1, 6)};
    ConditionReport ra = check_conditions(EquationSpec::from_terms(a));
    ConditionReport rb = check_conditions(EquationSpec::from_terms(b));
    CHECK(ra.all_pass() == rb.all_pass());
    CHECK(ra.c2_sums == rb.c2_sums);
}
