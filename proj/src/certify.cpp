#include "rado/certify.hpp"

#include "rado/formula.hpp"
#include "rado/repr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rado {

using nlohmann::json;

json to_json(const TemplateReport& report)
{
    json failures = json::array();
    for (const Failure& f : report.failures) {
        json params = json::object();
        for (const Param& p : f.params)
            params[p.name] = p.value;
        failures.push_back({{"params", params}, {"reason", f.reason}});
    }
    return {{"id", report.id},
            {"sweep", report.sweep},
            {"status", report.passed() ? "PASS" : "FAIL"},
            {"pass_count", report.pass_count},
            {"failures", failures}};
}

std::string SweepRange::describe() const
{
    std::ostringstream os;
    os << "a=" << a_min << ".." << a_max;
    if (m_min || m_max) {
        os << " m=";
        if (m_min)
            os << *m_min;
        os << "..";
        if (m_max)
            os << *m_max;
    }
    return os.str();
}

namespace {

// Upper-range sweeps assume a >= 4 and m in [a^2-a+2, a^2+4a].
template <class F>
void for_upper_range(const SweepRange& sweep, Int a_floor, F&& f)
{
    for (Int a = std::max(sweep.a_min, a_floor); a <= sweep.a_max; ++a)
        for (Int m = a * a - a + 2; m <= a * a + 4 * a; ++m)
            if (sweep.admits_m(m))
                f(a, m);
}

TemplateInstance make_instance(std::vector<Param> params, Int m, Int a, std::vector<Group> groups, Int bound)
{
    return TemplateInstance{std::move(params), m, a, CompactAssignment(std::move(groups)), bound, {}};
}

std::vector<TemplateInstance> top_run(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for_upper_range(sweep, 4, [&](Int a, Int m) {
        for (Int j = 0; j <= a - 1; ++j)
            out.push_back(make_instance({{"a", a}, {"m", m}, {"j", j}}, m, a,
                                        {{m - 2 * a + 2 * j + 1, a}, {a - 1 - j, a - 1}, {a - 1 - j, 1}, {1, m - a + j}},
                                        compute_C(m, a)));
    });
    return out;
}

std::vector<TemplateInstance> low_run(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for_upper_range(sweep, 4, [&](Int a, Int m) {
        for (Int j = 0; j <= a - 1; ++j)
            out.push_back(make_instance({{"a", a}, {"m", m}, {"j", j}}, m, a, {{m - a + j, j + 1}, {a - j, m - a + j}},
                                        compute_C(m, a)));
    });
    return out;
}

std::vector<TemplateInstance> quotient(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for_upper_range(sweep, 4, [&](Int a, Int m) {
        for (Int d = ceil_div(m - 1, a) * a; d <= a * (m - 1); d += a) {
            // d = (m-1)j + k with 1 <= j <= a-1 and 0 <= k <= m-1.
            Int j = d / (m - 1);
            Int k = d % (m - 1);
            if (j == a) {
                j = a - 1;
                k = m - 1;
            }
            auto inst = make_instance({{"a", a}, {"m", m}, {"d", d}}, m, a, {{m - 1 - k, j}, {k, j + 1}, {1, d / a}},
                                      compute_C(m, a));
            if (j < 1 || j > a - 1)
                inst.defect = "no split d=(m-1)j+k with 1<=j<=a-1";
            out.push_back(std::move(inst));
        }
    });
    return out;
}

std::vector<TemplateInstance> square_boundary(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for (Int a = std::max<Int>(sweep.a_min, 3); a <= sweep.a_max; ++a) {
        const Int m = a * a - a + 1;
        if (!sweep.admits_m(m))
            continue;
        const Int sq = (a - 1) * (a - 1);
        const Int bound = compute_C(m, a);
        std::vector<TemplateInstance> forms{
            make_instance({{"a", a}, {"form", 1}}, m, a, {{a * a - a, 1}, {1, a - 1}}, bound),
            make_instance({{"a", a}, {"form", 2}}, m, a, {{a * a - a, a - 1}, {1, sq}}, bound),
            make_instance({{"a", a}, {"form", 3}}, m, a, {{sq, 1}, {a, sq}}, bound),
        };
        for (auto& f : forms) {
            if (bound != sq)
                f.defect = "C(m,a)=" + std::to_string(bound) + " but (a-1)^2=" + std::to_string(sq);
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<TemplateInstance> fixed(Int m, Int a, Int bound, std::initializer_list<std::string_view> texts)
{
    std::vector<TemplateInstance> out;
    Int idx = 0;
    for (auto text : texts)
        out.push_back(TemplateInstance{
            {{"m", m}, {"a", a}, {"solution", ++idx}}, m, a, CompactAssignment::parse(text), bound, {}});
    return out;
}

std::vector<TemplateInstance> two_v_ladder(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for (Int a = std::max<Int>(sweep.a_min, 4); a <= sweep.a_max; ++a) {
        for (Int v = 3; v <= a - 1; ++v) {
            const Int m = a * v;
            if (!sweep.admits_m(m))
                continue;
            out.push_back(make_instance({{"a", a}, {"v", v}}, m, a,
                                        {{m - a - 1, 1}, {a - 1, 2 * v}, {1, 2 * v + 1}, {1, 3 * v - 1}},
                                        compute_C(m, a)));
        }
    }
    return out;
}

std::vector<TemplateInstance> m_equals_a(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for (Int a = std::max<Int>(sweep.a_min, 4); a <= sweep.a_max; ++a)
        if (sweep.admits_m(a))
            out.push_back(make_instance({{"a", a}}, a, a, {{a - 4, 3}, {3, 4}, {1, 3}}, 4));
    return out;
}

std::vector<TemplateInstance> m_equals_a_minus_4(const SweepRange& sweep)
{
    std::vector<TemplateInstance> out;
    for (Int a = std::max<Int>(sweep.a_min, 10); a <= std::min<Int>(sweep.a_max, 14); ++a) {
        const Int m = a - 4;
        if (!sweep.admits_m(m))
            continue;
        out.push_back(make_instance({{"a", a}, {"solution", 1}}, m, a, {{5, 6}, {a - 9, 3}}, 6));
        out.push_back(make_instance({{"a", a}, {"solution", 2}}, m, a, {{1, 6}, {a - 5, 1}}, 6));
    }
    return out;
}

} // namespace

const std::vector<SolutionTemplate>& builtin_templates()
{
    static const std::vector<SolutionTemplate> templates{
        {"top-run", "m-a..m-1 forced blue once 1, a-1, a are red", top_run},
        {"low-run", "1..a forced red once m-a..m-1 are blue", low_run},
        {"quotient", "d/a forced blue for a|d, m-1 <= d <= a(m-1)", quotient},
        {"square-boundary", "m = a^2-a+1: the scaled pair of solutions in [(a-1)^2]", square_boundary},
        {"four-five", "(m,a) = (4,5): solutions fixing the unique bad coloring of [8] and closing [9]",
         [](const SweepRange&) {
             return fixed(4, 5, 9,
                          {"[3->5; 1->3]", "[2->6; 2->3]", "[2->7; 1->6; 1->4]", "[2->8; 2->4]", "[1->9; 3->3]",
                           "[1->5; 1->6; 1->9; 1->4]"});
         }},
        {"a4-m11", "(m,a) = (11,4): red solution once 2 and 3 are blue",
         [](const SweepRange&) {
             return fixed(11, 4, compute_C(11, 4), {"[10->2; 1->5]", "[6->2; 4->3; 1->6]", "[8->1; 2->6; 1->5]"});
         }},
        {"two-v-ladder", "m = av, 3 <= v <= a-1: red solution from 1, 2v, 2v+1, 3v-1", two_v_ladder},
        {"m-equals-a", "m = a >= 4: red solution from 3 and 4", m_equals_a},
        {"m-equals-a-minus-4", "m = a-4, 10 <= a <= 14: solutions placing 6 and closing [6]", m_equals_a_minus_4},
    };
    return templates;
}

const SolutionTemplate& find_template(std::string_view id)
{
    for (const auto& t : builtin_templates())
        if (t.id == id)
            return t;
    throw std::invalid_argument("unknown template id '" + std::string(id) + "'");
}

TemplateReport verify_template(const SolutionTemplate& tmpl, const SweepRange& sweep)
{
    TemplateReport report{tmpl.id, sweep.describe(), 0, {}};
    for (const TemplateInstance& inst : tmpl.instances(sweep)) {
        std::string reason = inst.defect;
        try {
            if (reason.empty() && !validate_compact(EquationInstance(inst.m, inst.a), inst.assignment))
                reason = "not a solution: " + inst.assignment.to_string();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (reason.empty()) {
            for (const Group& g : inst.assignment.groups())
                if (g.count > 0 && (g.value < 1 || g.value > inst.bound)) {
                    reason = "value " + std::to_string(g.value) + " outside [" + std::to_string(inst.bound) + "]";
                    break;
                }
        }
        if (reason.empty())
            ++report.pass_count;
        else
            report.failures.push_back({inst.params, reason});
    }
    return report;
}

TemplateReport verify_template(std::string_view id, const SweepRange& sweep)
{
    return verify_template(find_template(id), sweep);
}

std::vector<SolutionTemplate> templates_from_json(const json& doc)
{
    if (!doc.is_array())
        throw ParseError("template file must hold a JSON array");
    std::vector<std::string> order;
    std::vector<std::vector<TemplateInstance>> grouped;
    for (const auto& entry : doc) {
        const auto id = entry.at("id").get<std::string>();
        const Int m = entry.at("m").get<Int>();
        const Int a = entry.at("a").get<Int>();
        auto asg = CompactAssignment::parse(entry.at("assignment").get<std::string>());
        const Int bound = entry.contains("bound") ? entry.at("bound").get<Int>() : compute_C(std::max<Int>(m, 2), a);
        auto pos = std::find(order.begin(), order.end(), id);
        if (pos == order.end()) {
            order.push_back(id);
            grouped.emplace_back();
            pos = order.end() - 1;
        }
        auto& bucket = grouped[static_cast<std::size_t>(pos - order.begin())];
        bucket.push_back(TemplateInstance{
            {{"m", m}, {"a", a}, {"entry", static_cast<Int>(bucket.size() + 1)}}, m, a, std::move(asg), bound, {}});
    }
    std::vector<SolutionTemplate> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto instances = grouped[i];
        out.push_back({order[i], "user-supplied", [instances](const SweepRange&) { return instances; }});
    }
    return out;
}

namespace {

bool congruent(Int x, Int y, Int mod) { return floor_mod(x - y, mod) == 0; }

} // namespace

std::vector<BadColoringEntry> builtin_bad_colorings()
{
    auto colored = [](Int n, std::initializer_list<Int> red) { return Coloring::from_red_set(n, std::vector<Int>(red)); };
    auto region_of = [](Int m, Int a) { return classify_region(EquationInstance(m, a)); };
    return {
        {"R{1,3} B{2}", colored(3, {1, 3}), "2a/3+1 <= m <= a, a >= 4, a !== m-1 (mod 2)",
         [=](Int m, Int a) { return a >= 4 && region_of(m, a) == Region::Band4 && !congruent(a, m - 1, 2); }},
        {"R{1,4} B{2,3}", colored(4, {1, 4}), "3a/2+1 < m <= 2a+1, a !== m-1 (mod 3)",
         [](Int m, Int a) {
             return a >= 3 && m <= 2 * a + 1 && compare_to_threshold(m, a, kThreeHalves) > 0 &&
                    !congruent(a, m - 1, 3);
         }},
        {"R{1,4} B{2,3} (low band)", colored(4, {1, 4}), "a/2+1 <= m < 2a/3+1, a !== m-1 (mod 3)",
         [=](Int m, Int a) { return a >= 3 && region_of(m, a) == Region::Band5 && !congruent(a, m - 1, 3); }},
        {"R{1} B{2,3}", colored(3, {1}), "a/2+1 <= m < 2a/3+1",
         [=](Int m, Int a) { return a >= 3 && region_of(m, a) == Region::Band5; }},
        {"R{1,4,5} B{2,3}", colored(5, {1, 4, 5}), "m = a-4, 10 <= a <= 14",
         [](Int m, Int a) { return a >= 10 && a <= 14 && m == a - 4; }},
        {"R{1,4,5,6} B{2,3,7,8}", colored(8, {1, 4, 5, 6}), "(m,a) = (4,5)",
         [](Int m, Int a) { return m == 4 && a == 5; }},
    };
}

TemplateReport verify_bad_colorings(const std::vector<BadColoringEntry>& catalog, const SweepRange& sweep)
{
    TemplateReport report{"bad-colorings", sweep.describe(), 0, {}};
    for (std::size_t e = 0; e < catalog.size(); ++e) {
        const auto& entry = catalog[e];
        for (Int a = std::max<Int>(sweep.a_min, 1); a <= sweep.a_max; ++a) {
            for (Int m = 3; m <= 2 * a + 1; ++m) {
                if (!sweep.admits_m(m) || !entry.applies(m, a))
                    continue;
                const EquationInstance inst(m, a);
                if (auto w = find_mono_solution(inst, entry.coloring))
                    report.failures.push_back({{{"entry", static_cast<Int>(e)}, {"m", m}, {"a", a}},
                                               entry.id + " on [" + std::to_string(entry.coloring.size()) +
                                                   "] has monochromatic " + w->assignment.to_string()});
                else
                    ++report.pass_count;
            }
        }
    }
    return report;
}

namespace {

Int exact_div(Int num, Int den, const char* what)
{
    if (num % den != 0)
        throw std::logic_error(std::string("non-integral ") + what);
    return num / den;
}

std::vector<Int> one_to(Int a)
{
    std::vector<Int> v(static_cast<std::size_t>(a));
    std::iota(v.begin(), v.end(), Int{1});
    return v;
}

std::vector<Group> grouped(const std::vector<Int>& ascending)
{
    std::vector<Group> groups;
    for (Int v : ascending) {
        if (!groups.empty() && groups.back().value == v)
            ++groups.back().count;
        else
            groups.push_back({1, v});
    }
    return groups;
}

// [block -> s; completion...; 3 -> big]
std::optional<CompactAssignment> assemble(Int a, Int block, Int s, Int count, Int target, Int big)
{
    if (count < 0)
        return std::nullopt;
    std::vector<Group> groups{{block, s}};
    if (count > 0) {
        const auto values = extract_composition(one_to(a), count, target);
        if (!values)
            return std::nullopt;
        for (const Group& g : grouped(*values))
            groups.push_back(g);
    } else if (target != 0) {
        return std::nullopt;
    }
    groups.push_back({3, big});
    return CompactAssignment(std::move(groups));
}

} // namespace

std::vector<CompletionConstruction> completion_constructions(Int a, Int m)
{
    if (a < 4 || m < a * a - a + 2)
        throw std::invalid_argument("completion constructions need a >= 4 and m >= a^2-a+2");
    const auto d = decompose(EquationInstance(m, a));
    std::vector<CompletionConstruction> out;
    if (d.c == 1)
        return out;

    const Int a2 = a * a;
    CompletionConstruction base;
    base.a = a;
    base.m = m;
    base.u = d.u;
    base.v = d.v;
    base.c = d.c;

    if (d.c == 0) {
        const Int q = exact_div(m, a, "m/a");
        const Int tail = exact_div((a - 1) * m + d.v * a, a2, "((a-1)m+va)/a^2");
        base.completion_count = 2 * q + a - 5;
        base.completion_target = (a - 2) * (q - 1) + (a - 2) * tail;
        for (Int s = 1; s + 1 <= q; ++s) {
            CompletionConstruction k = base;
            k.s = s;
            k.alpha_or_beta = (q - 1) * (s + 1) + tail;
            k.solution = assemble(a, (a - 2) * (q - 1), s, k.completion_count, k.completion_target, k.alpha_or_beta);
            out.push_back(std::move(k));
        }
        return out;
    }

    const Int c = d.c;
    const Int t = *d.t;
    const Int gamma = t * a - (c - 1) * (d.v + 1);
    const Int q = exact_div(m - c, a, "(m-c)/a");
    const Int p = q + 1; // (m+a-c)/a
    const Int tail = exact_div((c - 1) * (m + a - c) + a * gamma, a2, "((c-1)(m+a-c)+a*gamma)/a^2");
    base.t = t;
    base.gamma = gamma;
    base.completion_count = 2 * q + c - 3;
    base.completion_target = (a - 2) * q + (a - 2) * tail;
    for (Int s = 1; s + 1 <= p; ++s) {
        CompletionConstruction k = base;
        k.s = s;
        k.alpha_or_beta = q * (s + 1) + tail;
        k.auxiliary = CompactAssignment({{m - c, s + 1}, {c - 2, p}, {1, p + gamma}, {1, k.alpha_or_beta}});
        k.solution = assemble(a, (a - 2) * q, s, k.completion_count, k.completion_target, k.alpha_or_beta);
        out.push_back(std::move(k));
    }
    return out;
}

TemplateReport verify_completions(const SweepRange& sweep)
{
    TemplateReport report{"completions", sweep.describe(), 0, {}};
    const std::vector<Int> one_two{1, 2};

    for (Int a = std::max<Int>(sweep.a_min, 4); a <= sweep.a_max; ++a) {
        for (Int m = 2 * a + 2; m <= a * a + 4 * a; ++m) {
            if (!sweep.admits_m(m))
                continue;
            std::vector<std::string> problems;
            auto check = [&](bool ok, std::string what) {
                if (!ok)
                    problems.push_back(std::move(what));
            };
            const EquationInstance inst(m, a);
            const Int C = compute_C(m, a);

            // C(m,a) red from 1, 2 red: n and n+1 are {1,2}-forced blue, C sits between.
            const Int n = ceil_div(m - 1, a);
            check(n + 1 <= C, "n+1 > C");
            check(n * (m - 1) <= a * C && a * C <= (n + 1) * (m - 1), "sandwich n(m-1) <= aC <= (n+1)(m-1) fails");
            for (Int k : {n, n + 1})
                check(representable(one_two, m - 1, a * k), "x_m=" + std::to_string(k) + " not {1,2}-solvable");

            if (m <= a * a - a) {
                // m = av + c: C on x_m and a-j left variables, 1s and 2s elsewhere.
                const Int v = m / a;
                const Int c = m % a;
                Int j = 1;
                while (j <= a && a * (v - 1) + j + c - 1 > j * C)
                    ++j;
                const Int rest = a * (v - 1) + j + c - 1;
                if (j > a) {
                    check(false, "no j <= a meets the lower inequality");
                } else {
                    check(j * C <= 2 * rest, "upper inequality fails at minimal j=" + std::to_string(j));
                    const auto fill = extract_composition(one_two, rest, j * C);
                    check(fill.has_value(), "{1,2} completion missing at j=" + std::to_string(j));
                    if (fill) {
                        auto groups = grouped(*fill);
                        groups.push_back({a - j + 1, C});
                        check(validate_compact(inst, CompactAssignment(groups)), "assembled C-solution invalid");
                    }
                }
            }

            if (m >= a * a - a + 2) {
                const auto d = decompose(inst);
                if (d.c >= 2) {
                    const Int t = *d.t;
                    const Int gamma = t * a - (d.c - 1) * (d.v + 1);
                    check(0 <= gamma && gamma <= a, "gamma outside [0,a]");
                    check(1 <= t && t <= d.v + 1, "t outside [1,v+1]");
                    check(m + a - 2 + a * a <= a * (m - 1), "m+a-2+a^2 > a(m-1)");
                    const Int forced = m + a - d.c + a * gamma; // a * ((m+a-c)/a + gamma)
                    check(m - 1 <= forced && forced <= a * (m - 1), "auxiliary element not quotient-forced");
                }
                try {
                    for (const auto& k : completion_constructions(a, m)) {
                        const std::string at = " at s=" + std::to_string(k.s);
                        check(k.completion_count <= k.completion_target &&
                                  k.completion_target <= a * k.completion_count,
                              "completion bracket fails" + at);
                        check(representable(one_to(a), k.completion_count, k.completion_target),
                              "completion not representable" + at);
                        check(k.alpha_or_beta <= C, "large element exceeds C" + at);
                        check(k.solution.has_value() && validate_compact(inst, *k.solution),
                              "assembled solution invalid" + at);
                        if (k.auxiliary)
                            check(validate_compact(inst, *k.auxiliary), "auxiliary solution invalid" + at);
                    }
                } catch (const std::exception& e) {
                    check(false, e.what());
                }
            }

            if (problems.empty()) {
                ++report.pass_count;
            } else {
                std::string joined;
                for (const auto& p : problems)
                    joined += (joined.empty() ? "" : "; ") + p;
                report.failures.push_back({{{"a", a}, {"m", m}}, joined});
            }
        }
    }
    return report;
}

} // namespace rado
