#include "oracle.hpp"
#include "rado/repr.hpp"

#include <doctest.h>

#include <random>

using namespace rado;

namespace {

bool witness_is_monochromatic(const EquationInstance& inst, const Coloring& col, const MonoWitness& w)
{
    if (!validate_compact(inst, w.assignment))
        return false;
    for (const Group& g : w.assignment.groups())
        if (g.count > 0 && (g.value > col.size() || col.at(g.value) != w.color))
            return false;
    return true;
}

std::string random_coloring(std::mt19937_64& rng, int n)
{
    std::string s(static_cast<std::size_t>(n), 'R');
    for (auto& ch : s)
        ch = (rng() & 1u) ? 'B' : 'R';
    return s;
}

} // namespace

TEST_SUITE("repr") {

TEST_CASE("representable examples")
{
    const std::vector<Int> one{1};
    const std::vector<Int> one_two{1, 2};
    const std::vector<Int> two_three{2, 3};
    const std::vector<Int> one_three{1, 3};
    CHECK(representable(one, 5, 5));
    CHECK_FALSE(representable(one_two, 5, 11));
    CHECK(representable(two_three, 3, 7));
    CHECK_FALSE(representable(one_three, 6, 9));
    CHECK(representable(one_three, 6, 10));
}

TEST_CASE("extract_composition examples")
{
    const std::vector<Int> two_three{2, 3};
    const std::vector<Int> one{1};
    const std::vector<Int> one_two{1, 2};
    CHECK(extract_composition(two_three, 3, 7) == std::vector<Int>{2, 2, 3});
    CHECK(extract_composition(one, 4, 4) == std::vector<Int>{1, 1, 1, 1});
    CHECK_FALSE(extract_composition(one_two, 3, 9).has_value());
}

TEST_CASE("representable agrees with full enumeration")
{
    const std::vector<Int> pool{1, 2, 3, 4, 5, 7};
    Int disagreements = 0;
    Int bad_compositions = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j)
            for (std::size_t l = j; l < pool.size(); ++l) {
                std::vector<Int> allowed{pool[i], pool[j], pool[l]};
                allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
                for (int k = 1; k <= 8; ++k) {
                    const auto sums = oracle::all_sums(allowed, k);
                    for (Int t = 0; t <= 60; ++t) {
                        const bool expect = sums.count(t) > 0;
                        if (representable(allowed, k, t) != expect)
                            ++disagreements;
                        const auto comp = extract_composition(allowed, k, t);
                        if (comp.has_value() != expect)
                            ++bad_compositions;
                        else if (comp) {
                            Int total = 0;
                            for (Int x : *comp)
                                total += x;
                            if (total != t || comp->size() != static_cast<std::size_t>(k) ||
                                !std::is_sorted(comp->begin(), comp->end()))
                                ++bad_compositions;
                        }
                    }
                }
            }
    CHECK(disagreements == 0);
    CHECK(bad_compositions == 0);
}

TEST_CASE("find_mono_solution examples")
{
    const EquationInstance i43(4, 3);
    const auto all_red = Coloring::parse("RRRR");
    const auto w = find_mono_solution(i43, all_red);
    REQUIRE(w.has_value());
    CHECK(w->color == Color::Red);
    CHECK(witness_is_monochromatic(i43, all_red, *w));
    CHECK(w->assignment == CompactAssignment::parse("[3->1; 1->1]"));

    const std::vector<Int> red45{1, 4, 5, 6};
    CHECK_FALSE(find_mono_solution({4, 5}, Coloring::from_red_set(8, red45)).has_value());
    CHECK_FALSE(find_mono_solution({9, 4}, Coloring::parse("RBBR")).has_value());

    const auto w73 = find_mono_solution({7, 3}, Coloring::parse("RRRR"));
    REQUIRE(w73.has_value());
    CHECK(w73->assignment == CompactAssignment::parse("[6->1; 1->2]"));
    CHECK_FALSE(is_bad_coloring({7, 3}, Coloring::parse("RRRR")));
    CHECK_FALSE(is_bad_coloring({3, 1}, Coloring::parse("RBBRR")));
}

TEST_CASE("find_mono_solution matches brute force on random colorings")
{
    std::mt19937_64 rng(7);
    Int disagreements = 0;
    Int unverified = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const Int m = 3 + static_cast<Int>(rng() % 5);
        const Int a = 1 + static_cast<Int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto text = random_coloring(rng, n);
        const EquationInstance inst(m, a);
        const auto col = Coloring::parse(text);
        const auto w = find_mono_solution(inst, col);
        if (w.has_value() != oracle::has_mono(m, a, text))
            ++disagreements;
        if (w && !witness_is_monochromatic(inst, col, *w))
            ++unverified;
    }
    CHECK(disagreements == 0);
    CHECK(unverified == 0);
}

TEST_CASE("badness is inherited by prefixes")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const EquationInstance inst(3 + static_cast<Int>(rng() % 4), 1 + static_cast<Int>(rng() % 5));
        const auto col = Coloring::parse(random_coloring(rng, 1 + static_cast<int>(rng() % 14)));
        if (!is_bad_coloring(inst, col))
            continue;
        for (Int k = 1; k < col.size(); ++k)
            CHECK(is_bad_coloring(inst, col.prefix(k)));
    }
}

TEST_CASE("tables beyond the cap raise a capacity error")
{
    const std::vector<Int> allowed{1, 2};
    CHECK_THROWS_AS(ReachTable(allowed, Int{1} << 14, Int{1} << 14), CapacityError);
    CHECK_NOTHROW(ReachTable(allowed, 8, 64));
}

}
