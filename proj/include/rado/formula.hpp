#pragma once

// Closed-form values of the 2-color Rado number R2(m,a) of L(m,a).

#include "rado/core.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rado {

/// C(m,a) = ceil( (m-1)/a * ceil((m-1)/a) ), integer arithmetic only.
/// Requires m >= 2 and a >= 1.
Int compute_C(Int m, Int a);
inline Int compute_C(const EquationInstance& inst) { return compute_C(inst.m(), inst.a()); }

/// m = u*a^2 + v*a + c with 0 <= v, c <= a-1.
struct Decomposition {
    Int u = 0;
    Int v = 0;
    Int c = 0;
    /// ceil((c-1)(v+1)/a), present when c >= 2.
    std::optional<Int> t;

    Int recompose(Int a) const noexcept { return u * a * a + v * a + c; }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Requires a >= 2.
Decomposition decompose(const EquationInstance& inst);

/// The three algebraic forms of C(m,a), split on the residue c. Requires a >= 2 and
/// m >= a^2 - a + 2. Every division is checked for exactness; a remainder throws
/// std::logic_error.
Int closed_form_C(const EquationInstance& inst);

enum class Region {
    TrivialOne, // m = a+1
    Band2,      // a+2 <= m <= 2a+1
    Tail,       // m >= 2a+2
    Band4,      // 2a/3+1 <= m <= a
    Band5,      // a/2+1 <= m < 2a/3+1
    BelowKnown, // m < a/2+1
    SmallA,     // a in {1,2}
};

std::string_view region_name(Region r) noexcept;
std::optional<Region> parse_region(std::string_view name) noexcept;

Region classify_region(const EquationInstance& inst);

struct FormulaVerdict {
    Region region = Region::BelowKnown;
    std::optional<Int> value; // nullopt means the value is not determined
    std::string rule;
};

/// Piecewise R2(m,a). Throws std::logic_error if two overlapping rules disagree.
FormulaVerdict rado_formula(const EquationInstance& inst);

/// The two-value sets whose solvability has a closed characterization
/// when a/2+1 <= m <= 2a+1.
enum class ValuePair { OneTwo, OneThree, TwoThree, OneFour };

/// Maps {x,y} (either order) to a ValuePair; throws std::invalid_argument otherwise.
ValuePair value_pair(Int x, Int y);
std::pair<Int, Int> pair_values(ValuePair p) noexcept;

/// Arithmetic test for a solution of L(m,a) using only the pair's two values.
/// Throws std::invalid_argument unless a/2+1 <= m <= 2a+1.
bool pair_solution_condition(const EquationInstance& inst, ValuePair pair);

} // namespace rado
