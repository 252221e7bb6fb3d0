#include "rado/repr.hpp"

#include <algorithm>

namespace rado {

namespace {

std::vector<Int> normalized(std::span<const Int> allowed)
{
    if (allowed.empty())
        throw std::invalid_argument("allowed value set is empty");
    std::vector<Int> out(allowed.begin(), allowed.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.front() < 1)
        throw std::invalid_argument("allowed values must be positive");
    return out;
}

void check_capacity(Int parts, Int width)
{
    if (width > 0 && parts > kTableCapBits / width)
        throw CapacityError("reachability table of " + std::to_string(parts) + " x " + std::to_string(width) +
                            " bits exceeds the 2^26 cap");
}

} // namespace

ReachTable::ReachTable(std::span<const Int> allowed, Int parts, Int width)
    : allowed_(normalized(allowed)), parts_(parts)
{
    if (parts < 0 || width < 1)
        throw std::invalid_argument("reach table needs parts >= 0 and width >= 1");
    check_capacity(std::max<Int>(parts, 1), width);
    rows_.reserve(static_cast<std::size_t>(parts + 1));
    rows_.emplace_back(static_cast<std::size_t>(width));
    rows_[0].set(0);
    for (Int j = 1; j <= parts; ++j) {
        BitRow next(static_cast<std::size_t>(width));
        for (Int s : allowed_)
            next.or_shifted(rows_.back(), static_cast<std::size_t>(s));
        rows_.push_back(std::move(next));
    }
}

bool ReachTable::reach(Int j, Int sum) const noexcept
{
    if (j < 0 || j > parts_ || sum < 0)
        return false;
    return rows_[static_cast<std::size_t>(j)].test(static_cast<std::size_t>(sum));
}

std::optional<std::vector<Int>> ReachTable::composition(Int sum) const
{
    if (!reach(parts_, sum))
        return std::nullopt;
    std::vector<Int> picked;
    picked.reserve(static_cast<std::size_t>(parts_));
    Int remaining = sum;
    for (Int j = parts_; j >= 1; --j) {
        auto it = std::find_if(allowed_.rbegin(), allowed_.rend(),
                               [&](Int s) { return s <= remaining && reach(j - 1, remaining - s); });
        // reach(j, remaining) holds, so some predecessor exists.
        picked.push_back(*it);
        remaining -= *it;
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

namespace {

bool within_interval(const std::vector<Int>& sorted, Int k, Int t)
{
    return k * sorted.front() <= t && t <= k * sorted.back();
}

} // namespace

bool representable(std::span<const Int> allowed, Int k, Int t)
{
    if (k < 1 || t < 0)
        throw std::invalid_argument("representable needs k >= 1 and t >= 0");
    const auto sorted = normalized(allowed);
    if (!within_interval(sorted, k, t))
        return false;
    if (sorted.size() == 1)
        return t == k * sorted.front();
    // Only two rows are needed for the decision.
    check_capacity(2, t + 1);
    BitRow prev(static_cast<std::size_t>(t + 1));
    BitRow next(prev.size());
    prev.set(0);
    for (Int j = 1; j <= k; ++j) {
        next.reset();
        for (Int s : sorted)
            next.or_shifted(prev, static_cast<std::size_t>(s));
        std::swap(prev, next);
    }
    return prev.test(static_cast<std::size_t>(t));
}

std::optional<std::vector<Int>> extract_composition(std::span<const Int> allowed, Int k, Int t)
{
    if (k < 1 || t < 0)
        throw std::invalid_argument("extract_composition needs k >= 1 and t >= 0");
    const auto sorted = normalized(allowed);
    if (!within_interval(sorted, k, t))
        return std::nullopt;
    return ReachTable(sorted, k, t + 1).composition(t);
}

std::optional<MonoWitness> find_mono_solution(const EquationInstance& inst, const Coloring& col)
{
    const Int parts = inst.m() - 1;
    const Int a = inst.a();
    for (Color color : {Color::Red, Color::Blue}) {
        const auto cls = col.members(color);
        if (cls.empty())
            continue;
        const Int lo = cls.front();
        const Int hi = cls.back();
        std::optional<ReachTable> table;
        for (Int s : cls) {
            const Int target = a * s;
            if (target < parts * lo || target > parts * hi)
                continue;
            if (!table)
                table.emplace(cls, parts, a * hi + 1);
            if (!table->reach(parts, target))
                continue;
            const auto values = *table->composition(target);
            std::vector<Group> groups;
            for (Int v : values) {
                if (!groups.empty() && groups.back().value == v)
                    ++groups.back().count;
                else
                    groups.push_back({1, v});
            }
            groups.push_back({1, s});
            return MonoWitness{color, CompactAssignment(std::move(groups))};
        }
    }
    return std::nullopt;
}

} // namespace rado
