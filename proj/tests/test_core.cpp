#include "rado/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include <random>

using namespace rado;

TEST_SUITE("core") {

TEST_CASE("instances reject m < 3 and a < 1")
{
    CHECK_NOTHROW(EquationInstance(3, 1));
    CHECK_THROWS_AS(EquationInstance(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(EquationInstance(5, 0), std::invalid_argument);
}

TEST_CASE("validate_compact on the worked examples")
{
    CHECK(validate_compact({7, 3}, CompactAssignment::parse("[6->3; 1->6]")));
    CHECK(validate_compact({13, 4}, CompactAssignment::parse("[12->1; 1->3]")));
    CHECK(validate_compact({14, 4}, CompactAssignment::parse("[7->4; 3->3; 3->1; 1->10]")));
    CHECK_FALSE(validate_compact({7, 3}, CompactAssignment::parse("[6->3; 1->5]")));
}

TEST_CASE("validate_compact separates structural errors from false")
{
    CHECK_THROWS_AS(validate_compact({7, 3}, CompactAssignment::parse("[5->3; 1->6]")), StructureError);
    CHECK_THROWS_AS(validate_compact({3, 1}, CompactAssignment({{-1, 2}, {4, 1}})), StructureError);
    CHECK_THROWS_AS(validate_compact({3, 1}, CompactAssignment()), std::invalid_argument);
    CHECK_THROWS_AS(validate_compact({3, 1}, CompactAssignment({{3, 0}})), std::invalid_argument);
}

TEST_CASE("expand_compact")
{
    CHECK(expand_compact({3, 1}, CompactAssignment::parse("[2->5; 1->7]")) == std::vector<Int>{5, 5, 7});
    CHECK(expand_compact({3, 1}, CompactAssignment::parse("[3->1]")) == std::vector<Int>{1, 1, 1});
    CHECK(expand_compact({3, 1}, CompactAssignment::parse("[0->9; 3->2]")) == std::vector<Int>{2, 2, 2});
    CHECK_THROWS_AS(expand_compact({4, 1}, CompactAssignment::parse("[3->1]")), StructureError);
}

TEST_CASE("compact text form")
{
    const auto asg = CompactAssignment::parse("  [ 6 ->3;1->  6 ] ");
    CHECK(asg == CompactAssignment({{6, 3}, {1, 6}}));
    CHECK(asg.to_string() == "[6->3; 1->6]");
    CHECK(CompactAssignment::parse(asg.to_string()) == asg);
    CHECK_THROWS_AS(CompactAssignment::parse("[6=>3]"), ParseError);
    CHECK_THROWS_AS(CompactAssignment::parse("[6->3; 1->6] x"), ParseError);
    CHECK_THROWS_AS(CompactAssignment::parse("6->3"), ParseError);
}

TEST_CASE("coloring strings")
{
    const auto col = Coloring::parse("RBBRR");
    CHECK(col.size() == 5);
    CHECK(col.at(1) == Color::Red);
    CHECK(col.at(3) == Color::Blue);
    CHECK(col.members(Color::Red) == std::vector<Int>{1, 4, 5});
    CHECK(col.to_string() == "RBBRR");
    const std::vector<Int> red{1, 4, 5};
    CHECK(Coloring::from_red_set(5, red) == col);
    CHECK(col.prefix(3).to_string() == "RBB");
    CHECK(col.swapped().to_string() == "BRRBB");
    CHECK_THROWS_AS(Coloring::parse("RXB"), ParseError);
    CHECK_THROWS_AS(Coloring::parse(""), ParseError);
    CHECK_THROWS_AS(col.at(6), std::out_of_range);
}

TEST_CASE("validate_compact agrees with the expanded equation on random assignments")
{
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<Int> groups_d(1, 5);
    std::uniform_int_distribution<Int> value_d(1, 12);
    std::uniform_int_distribution<Int> a_d(1, 6);
    for (int trial = 0; trial < 20000; ++trial) {
        std::vector<Group> groups;
        const Int k = groups_d(rng);
        for (Int i = 0; i < k; ++i)
            groups.push_back({std::uniform_int_distribution<Int>(i + 1 == k ? 1 : 0, 4)(rng), value_d(rng)});
        CompactAssignment asg(groups);
        const Int m = asg.total_count();
        if (m < 3)
            continue;
        const EquationInstance inst(m, a_d(rng));
        const auto flat = expand_compact(inst, asg);
        Int left = 0;
        for (std::size_t i = 0; i + 1 < flat.size(); ++i)
            left += flat[i];
        CHECK(validate_compact(inst, asg) == (left == inst.a() * flat.back()));

        // Splitting a group leaves the verdict unchanged.
        const auto at = static_cast<std::size_t>(trial) % groups.size();
        if (groups[at].count >= 2) {
            auto split = groups;
            const Int first = groups[at].count / 2;
            split[at].count = first;
            split.insert(split.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                         Group{groups[at].count - first, groups[at].value});
            CHECK(validate_compact(inst, CompactAssignment(split)) == validate_compact(inst, asg));
        }
    }
}

TEST_CASE("threshold comparisons match arbitrary-precision rationals")
{
    using boost::multiprecision::cpp_rational;
    const AffineThreshold thresholds[] = {kThreeHalves, kTwoThirds, kOneHalf};
    Int mismatches = 0;
    for (Int a = 1; a <= 1000; ++a) {
        cpp_rational values[3];
        for (int i = 0; i < 3; ++i)
            values[i] = cpp_rational(thresholds[i].num * a, thresholds[i].den) + 1;
        for (Int m = 1; m <= 1000; ++m) {
            const cpp_rational rm(m);
            for (int i = 0; i < 3; ++i) {
                const auto exact = compare_to_threshold(m, a, thresholds[i]);
                const bool less = rm < values[i];
                const bool equal = rm == values[i];
                if ((exact < 0) != less || (exact == 0) != equal)
                    ++mismatches;
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("integer helpers")
{
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(8, 2) == 4);
    CHECK(ceil_div(0, 3) == 0);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_mod(-1, 3) == 2);
}

}
