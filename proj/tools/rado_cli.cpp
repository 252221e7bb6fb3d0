// rado: closed-form values, exhaustive search, witness checks and certificate
// sweeps for the 2-color Rado numbers of x_1 + ... + x_{m-1} = a x_m.
//
// Exit codes: 0 success, 2 usage, 3 budget exhausted, 4 discrepancy, 5 certificate failure.

#include "rado/certify.hpp"
#include "rado/formula.hpp"
#include "rado/repr.hpp"
#include "rado/search.hpp"
#include "rado/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDiscrepancy = 4;
constexpr int kExitCertificate = 5;

struct Range {
    rado::Int lo = 0;
    rado::Int hi = 0;
};

Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const rado::Int v = std::stoll(text);
            return {v, v};
        }
        std::size_t used = 0;
        Range r{std::stoll(text.substr(0, dots), &used), std::stoll(text.substr(dots + 2))};
        if (used != dots || r.lo > r.hi)
            throw std::invalid_argument(text);
        return r;
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected LO..HI, got '" + text + "'");
    }
}

unsigned default_threads()
{
    if (const char* env = std::getenv("RADO_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return 1;
}

std::string status_name(rado::ProofStatus s)
{
    return s == rado::ProofStatus::Proven ? "Proven" : "ExhaustedBudget";
}

int cmd_formula(rado::Int m, rado::Int a, bool as_json)
{
    const rado::EquationInstance inst(m, a);
    const auto v = rado::rado_formula(inst);
    const auto C = rado::compute_C(inst);
    const std::string value = v.value ? std::to_string(*v.value) : "unknown";
    if (as_json) {
        nlohmann::json j{{"m", m}, {"a", a}, {"region", rado::region_name(v.region)}, {"C", C}, {"rule", v.rule}};
        j["R2"] = v.value ? nlohmann::json(*v.value) : nlohmann::json("unknown");
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "region=" << rado::region_name(v.region) << " C=" << C << " R2=" << value << " rule=" << v.rule
                  << '\n';
    }
    return kExitOk;
}

int cmd_exact(rado::Int m, rado::Int a, const rado::ExactOptions& opts, bool as_json)
{
    const rado::EquationInstance inst(m, a);
    const auto r = rado::exact_rado(inst, opts);
    const std::string witness = r.witness ? r.witness->to_string() : "";
    if (as_json) {
        nlohmann::json j{{"m", m},
                         {"a", a},
                         {"value", r.value},
                         {"status", status_name(r.status)},
                         {"witness", witness},
                         {"nodes", r.stats.nodes},
                         {"ms", r.stats.elapsed_ms}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "value=" << r.value << " status=" << status_name(r.status) << " witness="
                  << (witness.empty() ? "-" : witness) << " nodes=" << r.stats.nodes << " ms=" << r.stats.elapsed_ms
                  << '\n';
    }
    return r.status == rado::ProofStatus::Proven ? kExitOk : kExitBudget;
}

int cmd_verify(rado::Int m, rado::Int a, const std::string& coloring)
{
    const rado::EquationInstance inst(m, a);
    const auto col = rado::Coloring::parse(coloring);
    if (auto w = rado::find_mono_solution(inst, col))
        std::cout << "MONO " << rado::color_char(w->color) << ' ' << w->assignment.to_string() << '\n';
    else
        std::cout << "BAD\n";
    return kExitOk;
}

struct TableArgs {
    std::string a_range = "3..6";
    std::string m_range = "3..40";
    std::string mode = "both";
    std::string format = "csv";
    std::string out;
    rado::Int max_C = 22;
    rado::Int budget = rado::kUnlimitedBudget;
    rado::Int n_max = 100;
    unsigned threads = 1;
    bool hint = false;
};

int cmd_table(const TableArgs& args)
{
    const auto mode = rado::parse_table_mode(args.mode);
    const auto format = rado::parse_table_format(args.format);
    if (!mode || !format) {
        std::cerr << "error: --mode must be formula|exact|both and --format csv|json\n";
        return kExitUsage;
    }
    const Range ar = parse_range(args.a_range);
    const Range mr = parse_range(args.m_range);
    rado::TableConfig cfg;
    cfg.a_min = ar.lo;
    cfg.a_max = ar.hi;
    cfg.m_min = mr.lo;
    cfg.m_max = mr.hi;
    cfg.mode = *mode;
    cfg.max_C = args.max_C;
    cfg.exact.n_max = args.n_max;
    cfg.exact.search.budget = args.budget;
    cfg.exact.use_hint = args.hint;
    cfg.threads = args.threads;

    std::vector<rado::ResultRow> previous;
    if (!args.out.empty()) {
        previous = rado::load_rows(args.out, *format);
        // Fail early on an unwritable destination.
        std::ofstream probe(args.out + ".tmp", std::ios::trunc);
        if (!probe) {
            std::cerr << "error: cannot write " << args.out << '\n';
            return kExitUsage;
        }
    }
    std::function<void(const std::vector<rado::ResultRow>&)> checkpoint;
    if (!args.out.empty())
        checkpoint = [&](const std::vector<rado::ResultRow>& rows) { rado::save_rows(args.out, rows, *format); };

    const auto rows = rado::run_table(cfg, previous, checkpoint);
    if (args.out.empty()) {
        if (*format == rado::TableFormat::Csv)
            rado::write_csv(std::cout, rows);
        else
            rado::write_json(std::cout, rows);
    } else {
        rado::save_rows(args.out, rows, *format);
    }
    std::size_t discrepancies = 0;
    for (const auto& r : rows)
        if (r.discrepancy()) {
            ++discrepancies;
            std::cerr << "DISCREPANCY a=" << r.a << " m=" << r.m << " formula=" << *r.formula << " exact=" << r.exact
                      << '\n';
        }
    std::cerr << rows.size() << " rows, " << discrepancies << " discrepancies\n";
    return discrepancies ? kExitDiscrepancy : kExitOk;
}

int cmd_lemmas(const std::string& a_range, const std::string& out, const std::string& extra)
{
    const Range ar = parse_range(a_range);
    const rado::SweepRange sweep{ar.lo, ar.hi, std::nullopt, std::nullopt};

    std::vector<rado::TemplateReport> reports;
    for (const auto& t : rado::builtin_templates())
        reports.push_back(rado::verify_template(t, sweep));
    if (!extra.empty()) {
        std::ifstream in(extra);
        if (!in) {
            std::cerr << "error: cannot read " << extra << '\n';
            return kExitUsage;
        }
        for (const auto& t : rado::templates_from_json(nlohmann::json::parse(in)))
            reports.push_back(rado::verify_template(t, sweep));
    }
    reports.push_back(rado::verify_bad_colorings(rado::builtin_bad_colorings(), sweep));
    reports.push_back(rado::verify_completions(sweep));

    bool all_pass = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << " [" << r.sweep << "] " << r.pass_count << " ok, "
                  << r.failures.size() << " failed\n";
        for (const auto& f : r.failures) {
            std::cout << "  -";
            for (const auto& p : f.params)
                std::cout << ' ' << p.name << '=' << p.value;
            std::cout << ": " << f.reason << '\n';
        }
        doc.push_back(rado::to_json(r));
    }
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) {
            std::cerr << "error: cannot write " << out << '\n';
            return kExitUsage;
        }
        file << doc.dump(2) << '\n';
    }
    return all_pass ? kExitOk : kExitCertificate;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2-color Rado numbers of x_1 + ... + x_{m-1} = a x_m"};
    app.require_subcommand(1);

    rado::Int m = 0;
    rado::Int a = 0;
    bool as_json = false;

    auto* formula = app.add_subcommand("formula", "closed-form value of R2(m,a)");
    formula->add_option("--m", m, "number of variables")->required();
    formula->add_option("--a", a, "coefficient of x_m")->required();
    formula->add_flag("--json", as_json, "JSON output");

    rado::ExactOptions exact_opts;
    exact_opts.search.threads = default_threads();
    auto* exact = app.add_subcommand("exact", "R2(m,a) by exhaustive search");
    exact->add_option("--m", m)->required();
    exact->add_option("--a", a)->required();
    exact->add_option("--n-max", exact_opts.n_max, "give up above this n");
    exact->add_option("--budget", exact_opts.search.budget, "search node budget");
    exact->add_option("--threads", exact_opts.search.threads, "search workers");
    exact->add_flag("--hint", exact_opts.use_hint, "start the ascent at C(m,a)-1");
    exact->add_flag("--json", as_json, "JSON output");

    std::string coloring;
    auto* verify = app.add_subcommand("verify", "check a coloring for monochromatic solutions");
    verify->add_option("--m", m)->required();
    verify->add_option("--a", a)->required();
    verify->add_option("--coloring", coloring, "string over {R,B}; position i is element i")->required();

    TableArgs targs;
    targs.threads = default_threads();
    auto* table = app.add_subcommand("table", "sweep a grid of (a,m)");
    table->add_option("--a", targs.a_range, "a range LO..HI");
    table->add_option("--m", targs.m_range, "m range LO..HI");
    table->add_option("--mode", targs.mode, "formula|exact|both");
    table->add_option("--max-C", targs.max_C, "search only cells with C(m,a) <= this");
    table->add_option("--budget", targs.budget, "search node budget per cell");
    table->add_option("--n-max", targs.n_max, "give up above this n");
    table->add_option("--threads", targs.threads, "cells computed concurrently");
    table->add_flag("--hint", targs.hint, "start each ascent at C(m,a)-1");
    table->add_option("--out", targs.out, "output file; an existing file is resumed");
    table->add_option("--format", targs.format, "csv|json");

    std::string a_range = "3..20";
    std::string lemma_out;
    std::string extra;
    auto* lemmas = app.add_subcommand("lemmas", "run every certificate sweep");
    lemmas->add_option("--a-range", a_range, "a range LO..HI");
    lemmas->add_option("--out", lemma_out, "write reports as JSON");
    lemmas->add_option("--extra", extra, "additional fixed-instance templates (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*formula)
            return cmd_formula(m, a, as_json);
        if (*exact)
            return cmd_exact(m, a, exact_opts, as_json);
        if (*verify)
            return cmd_verify(m, a, coloring);
        if (*table)
            return cmd_table(targs);
        if (*lemmas)
            return cmd_lemmas(a_range, lemma_out, extra);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rado::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rado::RadoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
