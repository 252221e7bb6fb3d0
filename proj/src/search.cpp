#include "rado/search.hpp"

#include "rado/bitrow.hpp"
#include "rado/formula.hpp"
#include "rado/repr.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <thread>

namespace rado {

namespace {

enum class Step { Found, Exhausted, OverBudget };

/// Sums reachable with exactly j members of one color class, j = 0..m-1, kept as a
/// stack indexed by class size so backtracking is a pointer decrement.
class ClassState {
public:
    ClassState(Int parts, Int width, Int max_members)
    {
        levels_.resize(static_cast<std::size_t>(max_members + 1));
        for (auto& level : levels_) {
            level.rows.assign(static_cast<std::size_t>(parts + 1), BitRow(static_cast<std::size_t>(width)));
            level.targets = BitRow(static_cast<std::size_t>(width));
        }
        levels_[0].rows[0].set(0);
    }

    /// Adds `value`; returns false (leaving the class unchanged) if that creates a solution.
    bool push(Int value, Int a)
    {
        const Level& cur = levels_[size_];
        Level& next = levels_[size_ + 1];
        next.rows[0].assign(cur.rows[0]);
        for (std::size_t j = 1; j < next.rows.size(); ++j) {
            next.rows[j].assign(cur.rows[j]);
            next.rows[j].or_shifted(next.rows[j - 1], static_cast<std::size_t>(value));
        }
        next.targets.assign(cur.targets);
        next.targets.set(static_cast<std::size_t>(a * value));
        if (next.rows.back().intersects(next.targets))
            return false;
        ++size_;
        return true;
    }

    void pop() noexcept { --size_; }
    void clear() noexcept { size_ = 0; }

private:
    struct Level {
        std::vector<BitRow> rows;
        BitRow targets;
    };
    std::vector<Level> levels_;
    std::size_t size_ = 0;
};

class Engine {
public:
    Engine(const EquationInstance& inst, Int n)
        : inst_(inst), n_(n), width_(inst.a() * n + 1),
          classes_{ClassState(inst.m() - 1, width_, n), ClassState(inst.m() - 1, width_, n)},
          colors_(static_cast<std::size_t>(n), Color::Red)
    {
    }

    void reset()
    {
        for (auto& c : classes_)
            c.clear();
        nodes_ = 0;
    }

    Int nodes() const noexcept { return nodes_; }

    bool assign(Int v, Color c)
    {
        colors_[static_cast<std::size_t>(v - 1)] = c;
        return classes_[static_cast<std::size_t>(c)].push(v, inst_.a());
    }

    void unassign(Color c) { classes_[static_cast<std::size_t>(c)].pop(); }

    /// Replays a known-bad prefix without counting nodes.
    void replay(const std::vector<Color>& prefix)
    {
        reset();
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (!assign(static_cast<Int>(i + 1), prefix[i]))
                throw std::logic_error("replayed prefix is not bad");
    }

    /// Visits bad colorings of [depth] in lexicographic order until `visit` returns false.
    template <class Visit>
    Step enumerate(Int v, Int depth, Int cap, Visit&& visit)
    {
        if (v > depth)
            return visit(std::vector<Color>(colors_.begin(), colors_.begin() + depth)) ? Step::Exhausted : Step::Found;
        for (Color c : {Color::Red, Color::Blue}) {
            if (v == 1 && c == Color::Blue)
                break;
            if (++nodes_ > cap)
                return Step::OverBudget;
            if (assign(v, c)) {
                const Step s = enumerate(v + 1, depth, cap, visit);
                unassign(c);
                if (s != Step::Exhausted)
                    return s;
            }
        }
        return Step::Exhausted;
    }

    /// Extends the current state from element v to the first bad coloring of [n].
    Step complete(Int v, Int cap)
    {
        if (v > n_)
            return Step::Found;
        for (Color c : {Color::Red, Color::Blue}) {
            if (v == 1 && c == Color::Blue)
                break;
            if (++nodes_ > cap)
                return Step::OverBudget;
            if (assign(v, c)) {
                const Step s = complete(v + 1, cap);
                if (s == Step::Found)
                    return s; // state left in place for the caller to read
                unassign(c);
                if (s == Step::OverBudget)
                    return s;
            }
        }
        return Step::Exhausted;
    }

    Coloring current() const { return Coloring(colors_); }

private:
    EquationInstance inst_;
    Int n_;
    Int width_;
    std::array<ClassState, 2> classes_;
    std::vector<Color> colors_;
    Int nodes_ = 0;
};

struct SubtreeResult {
    Step step = Step::Exhausted;
    std::optional<Coloring> coloring;
    Int nodes = 0;
    bool ran = false;
};

SubtreeResult run_subtree(Engine& engine, const std::vector<Color>& prefix, Int cap)
{
    engine.replay(prefix);
    SubtreeResult r;
    r.ran = true;
    r.step = engine.complete(static_cast<Int>(prefix.size()) + 1, cap);
    r.nodes = engine.nodes();
    if (r.step == Step::Found)
        r.coloring = engine.current();
    return r;
}

Coloring checked_leaf(const EquationInstance& inst, Coloring leaf)
{
    if (!is_bad_coloring(inst, leaf))
        throw std::logic_error("search accepted coloring " + leaf.to_string() + " that has a monochromatic solution");
    return leaf;
}

} // namespace

BadColoringOutcome exists_bad_coloring(const EquationInstance& inst, Int n, const SearchOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("exists_bad_coloring needs n >= 1");
    if ((inst.m() - 1) > kTableCapBits / (inst.a() * n + 1))
        throw CapacityError("search tables for n=" + std::to_string(n) + " exceed the 2^26 cap");

    using Kind = BadColoringOutcome::Kind;
    const Int budget = options.budget;
    const Int depth = std::clamp<Int>(options.split_depth, 1, n);

    Engine root(inst, n);
    std::vector<std::vector<Color>> prefixes;
    const bool leaves = depth == n;
    auto collect = [&](std::vector<Color> p) {
        prefixes.push_back(std::move(p));
        return !leaves;
    };
    if (root.enumerate(1, depth, budget, collect) == Step::OverBudget)
        return {Kind::BudgetExceeded, std::nullopt, root.nodes()};
    const Int prefix_nodes = root.nodes();

    if (leaves) {
        if (prefixes.empty())
            return {Kind::None, std::nullopt, prefix_nodes};
        return {Kind::Found, checked_leaf(inst, Coloring(prefixes.front())), prefix_nodes};
    }

    std::vector<SubtreeResult> results(prefixes.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(prefixes.size())));

    if (workers == 1) {
        Engine engine(inst, n);
        Int used = prefix_nodes;
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
            results[i] = run_subtree(engine, prefixes[i], budget - used);
            used += results[i].nodes;
            if (results[i].step != Step::Exhausted)
                break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_found{prefixes.size()};
        auto work = [&] {
            Engine engine(inst, n);
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= prefixes.size())
                    return;
                if (i > first_found.load())
                    continue;
                results[i] = run_subtree(engine, prefixes[i], budget - prefix_nodes);
                if (results[i].step == Step::Found) {
                    std::size_t seen = first_found.load();
                    while (i < seen && !first_found.compare_exchange_weak(seen, i)) {
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    // Ordered reduction: identical to visiting the subtrees one after another.
    Int used = prefix_nodes;
    for (auto& r : results) {
        if (!r.ran)
            throw std::logic_error("subtree skipped before the first bad coloring");
        used += r.nodes;
        if (r.step == Step::OverBudget || used > budget)
            return {Kind::BudgetExceeded, std::nullopt, std::min(used, budget + 1)};
        if (r.step == Step::Found)
            return {Kind::Found, checked_leaf(inst, std::move(*r.coloring)), used};
    }
    return {Kind::None, std::nullopt, used};
}

ExactResult exact_rado(const EquationInstance& inst, const ExactOptions& options)
{
    using Kind = BadColoringOutcome::Kind;
    const auto start = std::chrono::steady_clock::now();
    ExactResult result{inst, 1, std::nullopt, ProofStatus::ExhaustedBudget, {}};
    auto finish = [&](ProofStatus status, Int value) {
        result.status = status;
        result.value = value;
        result.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    };

    Int remaining = options.search.budget;
    auto probe = [&](Int n) {
        SearchOptions opts = options.search;
        opts.budget = remaining;
        auto out = exists_bad_coloring(inst, n, opts);
        remaining -= std::min(out.nodes, remaining);
        result.stats.nodes += out.nodes;
        return out;
    };

    Int n = 1;
    if (options.use_hint) {
        const Int h = compute_C(inst) - 1;
        if (h >= 1 && h <= options.n_max) {
            auto out = probe(h);
            if (out.kind == Kind::BudgetExceeded)
                return finish(ProofStatus::ExhaustedBudget, 1);
            if (out.kind == Kind::Found) {
                result.witness = std::move(out.coloring);
                n = h + 1;
            }
        }
    }
    for (; n <= options.n_max; ++n) {
        auto out = probe(n);
        if (out.kind == Kind::BudgetExceeded)
            return finish(ProofStatus::ExhaustedBudget, result.witness ? result.witness->size() + 1 : 1);
        if (out.kind == Kind::None) {
            if (n == 1)
                result.witness.reset();
            return finish(ProofStatus::Proven, n);
        }
        result.witness = std::move(out.coloring);
    }
    return finish(ProofStatus::ExhaustedBudget, options.n_max + 1);
}

} // namespace rado
