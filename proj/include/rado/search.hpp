#pragma once

// Exhaustive search for R2(m,a): the least n such that every red/blue coloring
// of [n] has a monochromatic solution of L(m,a).

#include "rado/core.hpp"

#include <limits>
#include <optional>

namespace rado {

inline constexpr Int kUnlimitedBudget = std::numeric_limits<Int>::max() / 4;

struct SearchOptions {
    /// Maximum number of (element, color) assignments tried.
    Int budget = kUnlimitedBudget;
    unsigned threads = 1;
    /// The tree is split into independent subtrees after this many elements.
    Int split_depth = 10;
};

struct BadColoringOutcome {
    enum class Kind { Found, None, BudgetExceeded };
    Kind kind = Kind::None;
    /// Lexicographically least bad coloring (Red < Blue, element 1 Red) when kind == Found.
    std::optional<Coloring> coloring;
    /// Deterministic node count: identical for every thread count.
    Int nodes = 0;
};

/// Depth-first search over colorings of [n] with element 1 fixed Red. A branch dies as
/// soon as the class just extended contains a monochromatic solution. Each accepted
/// leaf is re-checked from scratch with is_bad_coloring.
BadColoringOutcome exists_bad_coloring(const EquationInstance& inst, Int n, const SearchOptions& options = {});

struct ExactOptions {
    Int n_max = 100;
    SearchOptions search;
    /// Probe [C(m,a)-1] first instead of ascending from n = 1.
    bool use_hint = false;
};

enum class ProofStatus { Proven, ExhaustedBudget };

struct SearchStats {
    Int nodes = 0;
    double elapsed_ms = 0.0;
};

struct ExactResult {
    EquationInstance inst;
    /// R2(m,a) when Proven; otherwise the best proven lower bound.
    Int value = 0;
    /// Bad coloring of [value-1]; absent when value == 1.
    std::optional<Coloring> witness;
    ProofStatus status = ProofStatus::Proven;
    SearchStats stats;

    Int lower_bound() const noexcept { return value; }
};

ExactResult exact_rado(const EquationInstance& inst, const ExactOptions& options = {});

} // namespace rado
