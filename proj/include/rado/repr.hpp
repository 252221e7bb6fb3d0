#pragma once

// Exact-cardinality representability: is t a sum of exactly k values drawn,
// with repetition, from a finite set? Also the monochromatic-solution test
// for a fixed coloring, which reduces to that question once per element.

#include "rado/bitrow.hpp"
#include "rado/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rado {

/// Largest table (parts x sums, in bits) any query may allocate.
inline constexpr Int kTableCapBits = Int{1} << 26;

/// reach(j, s): s is a sum of exactly j values from `allowed`, for j <= parts and s < width.
class ReachTable {
public:
    /// `allowed` is sorted and deduplicated on entry. Throws CapacityError when
    /// parts * width exceeds kTableCapBits.
    ReachTable(std::span<const Int> allowed, Int parts, Int width);

    bool reach(Int j, Int sum) const noexcept;
    const BitRow& row(Int j) const noexcept { return rows_[static_cast<std::size_t>(j)]; }
    const std::vector<Int>& allowed() const noexcept { return allowed_; }
    Int parts() const noexcept { return parts_; }

    /// Greedy-largest walk back from (parts, sum); ascending multiset, or nullopt if unreachable.
    std::optional<std::vector<Int>> composition(Int sum) const;

private:
    std::vector<Int> allowed_;
    Int parts_;
    std::vector<BitRow> rows_;
};

/// t = s_1 + ... + s_k with every s_i in `allowed`.
bool representable(std::span<const Int> allowed, Int k, Int t);

/// One such multiset in ascending order, chosen deterministically, or nullopt.
std::optional<std::vector<Int>> extract_composition(std::span<const Int> allowed, Int k, Int t);

/// Some monochromatic solution of L(m,a) over [n], or nullopt iff none exists.
/// Red is scanned before Blue and candidate x_m values in increasing order.
std::optional<MonoWitness> find_mono_solution(const EquationInstance& inst, const Coloring& col);

inline bool is_bad_coloring(const EquationInstance& inst, const Coloring& col)
{
    return !find_mono_solution(inst, col).has_value();
}

} // namespace rado
