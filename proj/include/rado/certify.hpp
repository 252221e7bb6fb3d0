#pragma once

// Mechanical checks of explicit constructions: solution templates swept over their
// parameter ranges, catalogued bad colorings, and the completion arithmetic behind the
// upper bound C(m,a).

#include "rado/core.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

struct Param {
    std::string name;
    Int value;
    friend bool operator==(const Param&, const Param&) = default;
};

struct Failure {
    std::vector<Param> params;
    std::string reason;
};

struct TemplateReport {
    std::string id;
    std::string sweep;
    Int pass_count = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

nlohmann::json to_json(const TemplateReport& report);

/// Bounds on a. Bounds on m, when given, intersect each check's own hypothesis range.
struct SweepRange {
    Int a_min = 3;
    Int a_max = 20;
    std::optional<Int> m_min;
    std::optional<Int> m_max;

    bool admits_m(Int m) const noexcept { return (!m_min || m >= *m_min) && (!m_max || m <= *m_max); }
    std::string describe() const;
};

/// One concrete solution: values must all lie in [bound].
struct TemplateInstance {
    std::vector<Param> params;
    Int m = 0;
    Int a = 0;
    CompactAssignment assignment;
    Int bound = 0;
    /// Non-empty when the generator itself detected a broken side condition.
    std::string defect;
};

struct SolutionTemplate {
    std::string id;
    std::string description;
    std::function<std::vector<TemplateInstance>(const SweepRange&)> instances;
};

const std::vector<SolutionTemplate>& builtin_templates();

/// Throws std::invalid_argument for an unknown id.
const SolutionTemplate& find_template(std::string_view id);

TemplateReport verify_template(const SolutionTemplate& tmpl, const SweepRange& sweep);
TemplateReport verify_template(std::string_view id, const SweepRange& sweep);

/// Fixed-instance templates read from
/// [{"id": "...", "m": 7, "a": 3, "assignment": "[6->3; 1->6]", "bound": 6}, ...].
/// Entries sharing an id form one template; "bound" defaults to C(m,a).
std::vector<SolutionTemplate> templates_from_json(const nlohmann::json& doc);

struct BadColoringEntry {
    std::string id;
    Coloring coloring;
    std::string hypothesis;
    std::function<bool(Int m, Int a)> applies;
};

std::vector<BadColoringEntry> builtin_bad_colorings();

/// Every (m,a) in the sweep (m from 3 to 2a+1) satisfying an entry's hypothesis must
/// leave that entry's coloring bad.
TemplateReport verify_bad_colorings(const std::vector<BadColoringEntry>& catalog, const SweepRange& sweep);

/// A red solution assembled from a boundary element s (s red, s+1 blue): the large
/// element is used three times, s fills a block, and the rest is completed with values in [a].
struct CompletionConstruction {
    Int a = 0;
    Int m = 0;
    Int u = 0;
    Int v = 0;
    Int c = 0;
    std::optional<Int> t;
    std::optional<Int> gamma;
    Int s = 0;
    Int alpha_or_beta = 0;
    Int completion_count = 0;
    Int completion_target = 0;
    /// Full solution, present when the completion exists.
    std::optional<CompactAssignment> solution;
    /// For 2 <= c <= a-1: the solution forcing the large element red.
    std::optional<CompactAssignment> auxiliary;
};

/// All constructions for valid s; empty when c == 1 (a different argument applies).
/// Requires a >= 4 and m >= a^2 - a + 2. Throws std::logic_error on a non-integral quantity.
std::vector<CompletionConstruction> completion_constructions(Int a, Int m);

/// Completion arithmetic for m in [a^2-a+2, a^2+4a], plus the C(m,a) sandwich and the
/// {1,2}-completion for m >= 2a+2; a is clamped to >= 4.
TemplateReport verify_completions(const SweepRange& sweep);

} // namespace rado
