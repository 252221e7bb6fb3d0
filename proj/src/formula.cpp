#include "rado/formula.hpp"

#include <array>

namespace rado {

Int compute_C(Int m, Int a)
{
    if (m < 2 || a < 1)
        throw std::invalid_argument("compute_C needs m >= 2 and a >= 1");
    const Int inner = ceil_div(m - 1, a);
    return ceil_div((m - 1) * inner, a);
}

Decomposition decompose(const EquationInstance& inst)
{
    const Int a = inst.a();
    if (a < 2)
        throw std::invalid_argument("decompose needs a >= 2");
    Decomposition d;
    d.u = inst.m() / (a * a);
    const Int rest = inst.m() % (a * a);
    d.v = rest / a;
    d.c = rest % a;
    if (d.c >= 2)
        d.t = ceil_div((d.c - 1) * (d.v + 1), a);
    return d;
}

namespace {

Int exact_quotient(Int num, Int den, const char* what)
{
    if (num % den != 0)
        throw std::logic_error(std::string("non-integral ") + what + ": " + std::to_string(num) + "/" +
                               std::to_string(den));
    return num / den;
}

} // namespace

Int closed_form_C(const EquationInstance& inst)
{
    const Int m = inst.m();
    const Int a = inst.a();
    if (a < 2)
        throw std::invalid_argument("closed_form_C needs a >= 2");
    if (m < a * a - a + 2)
        throw std::invalid_argument("closed_form_C needs m >= a^2 - a + 2");
    const Decomposition d = decompose(inst);
    const Int a2 = a * a;
    if (d.c == 1)
        return exact_quotient((m - 1) * (m - 1), a2, "C(m,a) for c=1");
    if (d.c == 0)
        return exact_quotient(m * m - m + d.v * a, a2, "C(m,a) for c=0");
    const Int c = d.c;
    const Int numerator = m * m + (a - c - 1) * m + c - a * c - d.v * a * c + d.v * a + *d.t * a2;
    return exact_quotient(numerator, a2, "C(m,a) for 2<=c<=a-1");
}

std::string_view region_name(Region r) noexcept
{
    switch (r) {
    case Region::TrivialOne: return "TrivialOne";
    case Region::Band2: return "Band2";
    case Region::Tail: return "Tail";
    case Region::Band4: return "Band4";
    case Region::Band5: return "Band5";
    case Region::BelowKnown: return "BelowKnown";
    case Region::SmallA: return "SmallA";
    }
    return "?";
}

std::optional<Region> parse_region(std::string_view name) noexcept
{
    for (Region r : {Region::TrivialOne, Region::Band2, Region::Tail, Region::Band4, Region::Band5,
                     Region::BelowKnown, Region::SmallA})
        if (region_name(r) == name)
            return r;
    return std::nullopt;
}

Region classify_region(const EquationInstance& inst)
{
    const Int m = inst.m();
    const Int a = inst.a();
    if (a <= 2)
        return Region::SmallA;
    if (m == a + 1)
        return Region::TrivialOne;
    if (m >= a + 2 && m <= 2 * a + 1)
        return Region::Band2;
    if (m >= 2 * a + 2)
        return Region::Tail;
    // m <= a from here on.
    if (compare_to_threshold(m, a, kTwoThirds) >= 0)
        return Region::Band4;
    if (compare_to_threshold(m, a, kOneHalf) >= 0)
        return Region::Band5;
    return Region::BelowKnown;
}

namespace {

bool congruent(Int x, Int y, Int mod) { return floor_mod(x - y, mod) == 0; }

FormulaVerdict band2_verdict(Int m, Int a)
{
    FormulaVerdict v{Region::Band2, std::nullopt, {}};
    const bool low = compare_to_threshold(m, a, kThreeHalves) <= 0;
    if (low) {
        if (congruent(a, m - 1, 2)) {
            v.value = 3;
            v.rule = "Thm2(R=3)";
        } else {
            v.value = 4;
            v.rule = "Thm2(R=4,i)";
        }
    } else if (congruent(a, m - 1, 3)) {
        v.value = 4;
        v.rule = "Thm2(R=4,ii)";
    } else {
        v.value = 5;
        v.rule = "Thm2(R=5)";
    }

    // Edge cells where the band meets the C(m,a) regime.
    const bool three_divides = a % 3 == 0;
    auto require = [&](bool ok, const char* what) {
        if (!ok)
            throw std::logic_error(std::string("inconsistent closed form at m=") + std::to_string(m) +
                                   ", a=" + std::to_string(a) + ": " + what);
    };
    if (m == 2 * a && three_divides) {
        require(*v.value == 5 && compute_C(m, a) == 4, "expected R2=5 and C=4");
        v.rule = "Thm3(2a,3|a)";
    } else if (m == 2 * a + 1 && three_divides) {
        require(*v.value == compute_C(m, a) && *v.value == 4, "expected R2=C=4");
        v.rule = "Thm3(2a+1,3|a)";
    } else if (m == 2 * a + 1) {
        require(*v.value == 5 && compute_C(m, a) == 4, "expected R2=5 and C=4");
        v.rule = "Thm3(2a+1,3!|a)";
    }
    return v;
}

FormulaVerdict band5_verdict(Int m, Int a)
{
    FormulaVerdict v{Region::Band5, std::nullopt, {}};
    if ((m == 3 && a == 4)) {
        v.value = 10;
        v.rule = "Thm5-exception";
    } else if (m == 4 && a == 5) {
        v.value = 9;
        v.rule = "Thm5-exception";
    } else if (a >= 10 && a <= 14 && m == a - 4) {
        v.value = 6;
        v.rule = "Thm5-exception";
    } else if (congruent(a, m - 1, 3)) {
        v.value = 4;
        v.rule = "Thm5(mod3)";
    } else {
        v.value = 5;
        v.rule = "Thm5(mod3)";
    }
    return v;
}

} // namespace

FormulaVerdict rado_formula(const EquationInstance& inst)
{
    const Int m = inst.m();
    const Int a = inst.a();
    const Region region = classify_region(inst);
    switch (region) {
    case Region::SmallA:
        if (a == 1)
            return {region, m * m - m - 1, "a=1(m^2-m-1)"};
        if (m >= 6)
            return {region, compute_C(m, a), "a=2(C,m>=6)"};
        return {region, std::nullopt, "a=2(m<6)"};
    case Region::TrivialOne:
        return {region, 1, "Thm2(m=a+1)"};
    case Region::Band2:
        return band2_verdict(m, a);
    case Region::Tail:
        return {region, compute_C(m, a), m >= a * a - a + 1 ? "Thm1" : "Thm3(m>=2a+2)"};
    case Region::Band4:
        if (a == 3)
            return {region, 9, "Thm4(a=3)"};
        return {region, congruent(a, m - 1, 2) ? Int{3} : Int{4}, "Thm4(mod2)"};
    case Region::Band5:
        return band5_verdict(m, a);
    case Region::BelowKnown:
        return {region, std::nullopt, "none"};
    }
    throw std::logic_error("unhandled region");
}

ValuePair value_pair(Int x, Int y)
{
    if (x > y)
        std::swap(x, y);
    if (x == 1 && y == 2)
        return ValuePair::OneTwo;
    if (x == 1 && y == 3)
        return ValuePair::OneThree;
    if (x == 2 && y == 3)
        return ValuePair::TwoThree;
    if (x == 1 && y == 4)
        return ValuePair::OneFour;
    throw std::invalid_argument("no closed characterization for the pair {" + std::to_string(x) + "," +
                                std::to_string(y) + "}");
}

std::pair<Int, Int> pair_values(ValuePair p) noexcept
{
    switch (p) {
    case ValuePair::OneTwo: return {1, 2};
    case ValuePair::OneThree: return {1, 3};
    case ValuePair::TwoThree: return {2, 3};
    case ValuePair::OneFour: return {1, 4};
    }
    return {0, 0};
}

bool pair_solution_condition(const EquationInstance& inst, ValuePair pair)
{
    const Int m = inst.m();
    const Int a = inst.a();
    if (compare_to_threshold(m, a, kOneHalf) < 0 || m > 2 * a + 1)
        throw std::invalid_argument("pair characterization needs a/2+1 <= m <= 2a+1");
    switch (pair) {
    case ValuePair::OneTwo: return true;
    case ValuePair::OneThree: return congruent(a, m - 1, 2);
    case ValuePair::TwoThree:
        return compare_to_threshold(m, a, kTwoThirds) >= 0 && compare_to_threshold(m, a, kThreeHalves) <= 0;
    case ValuePair::OneFour: return congruent(a, m - 1, 3);
    }
    return false;
}

} // namespace rado
