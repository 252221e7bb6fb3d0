#include "rado/certify.hpp"
#include "rado/formula.hpp"
#include "rado/repr.hpp"

#include <doctest.h>

using namespace rado;

TEST_SUITE("certify") {

TEST_CASE("completion counts and targets at a = 4")
{
    const auto c14 = completion_constructions(4, 14);
    REQUIRE_FALSE(c14.empty());
    for (const auto& k : c14) {
        CHECK(k.c == 2);
        CHECK(k.completion_count == 5);
        CHECK(k.completion_target == 8);
        REQUIRE(k.solution.has_value());
        CHECK(validate_compact({14, 4}, *k.solution));
        REQUIRE(k.auxiliary.has_value());
        CHECK(validate_compact({14, 4}, *k.auxiliary));
    }
    const std::vector<Int> digits{1, 2, 3, 4};
    CHECK(representable(digits, 5, 8));

    const auto c16 = completion_constructions(4, 16);
    REQUIRE_FALSE(c16.empty());
    for (const auto& k : c16) {
        CHECK(k.c == 0);
        CHECK(k.completion_count == 7);
        CHECK(k.completion_target == 12);
        REQUIRE(k.solution.has_value());
        CHECK(validate_compact({16, 4}, *k.solution));
    }
    CHECK(representable(digits, 7, 12));

    CHECK(completion_constructions(4, 13 + 8).empty()); // c == 1
}

TEST_CASE("C(m,a) sandwich at a = 4, m = 13")
{
    const Int m = 13;
    const Int a = 4;
    const Int n = ceil_div(m - 1, a);
    const Int C = compute_C(m, a);
    CHECK(n == 3);
    CHECK(C == 9);
    CHECK(n * (m - 1) <= a * C);
    CHECK(a * C <= (n + 1) * (m - 1));
}

TEST_CASE("default sweeps pass")
{
    const SweepRange sweep;
    for (const auto& t : builtin_templates()) {
        const auto r = verify_template(t, sweep);
        CAPTURE(r.id);
        CHECK(r.passed());
        CHECK(r.pass_count > 0);
    }
    const auto bad = verify_bad_colorings(builtin_bad_colorings(), sweep);
    CHECK(bad.passed());
    CHECK(bad.pass_count > 0);
    const auto s3 = verify_completions(sweep);
    CHECK(s3.passed());
    CHECK(s3.pass_count > 0);
}

TEST_CASE("narrow sweeps pass")
{
    const SweepRange sweep{4, 8, std::nullopt, std::nullopt};
    CHECK(verify_completions(sweep).passed());
}

TEST_CASE("broken templates are reported with their parameters")
{
    const auto doc = nlohmann::json::parse(R"([
        {"id": "fixture", "m": 7, "a": 3, "assignment": "[6->3; 1->6]", "bound": 6},
        {"id": "fixture", "m": 7, "a": 3, "assignment": "[6->3; 1->5]", "bound": 6},
        {"id": "too-large", "m": 7, "a": 3, "assignment": "[6->3; 1->6]", "bound": 5}
    ])");
    const auto templates = templates_from_json(doc);
    REQUIRE(templates.size() == 2);
    const SweepRange sweep;
    const auto r = verify_template(templates[0], sweep);
    CHECK_FALSE(r.passed());
    CHECK(r.pass_count == 1);
    REQUIRE(r.failures.size() == 1);
    bool has_m = false;
    for (const auto& p : r.failures[0].params)
        has_m = has_m || (p.name == "m" && p.value == 7);
    CHECK(has_m);
    CHECK_FALSE(verify_template(templates[1], sweep).passed());

    const auto j = to_json(r);
    CHECK(j.at("failures").size() == 1);
}

TEST_CASE("a bad-coloring entry with a wrong hypothesis fails")
{
    BadColoringEntry wrong{"all-red", Coloring::parse("RRRR"), "every m", [](Int, Int) { return true; }};
    const auto r = verify_bad_colorings({wrong}, SweepRange{3, 5, std::nullopt, std::nullopt});
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.failures.empty());
}

TEST_CASE("unknown template ids are rejected")
{
    CHECK_THROWS_AS(find_template("no-such-template"), std::invalid_argument);
    CHECK_NOTHROW(find_template("top-run"));
}

}
