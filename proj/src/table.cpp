#include "rado/table.hpp"

#include "rado/formula.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace rado {

using nlohmann::json;

std::optional<TableMode> parse_table_mode(std::string_view s) noexcept
{
    if (s == "formula")
        return TableMode::Formula;
    if (s == "exact")
        return TableMode::Exact;
    if (s == "both")
        return TableMode::Both;
    return std::nullopt;
}

std::optional<TableFormat> parse_table_format(std::string_view s) noexcept
{
    if (s == "csv")
        return TableFormat::Csv;
    if (s == "json")
        return TableFormat::Json;
    return std::nullopt;
}

namespace {

std::string exact_field(const ResultRow& r)
{
    switch (r.exact_state) {
    case ExactState::Value: return std::to_string(r.exact);
    case ExactState::Skipped: return "skipped";
    case ExactState::Budget: return "budget";
    }
    return "";
}

Int to_int(std::string_view s, std::string_view field)
{
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("field " + std::string(field) + " is not an integer: '" + std::string(s) + "'");
    return v;
}

void set_exact(ResultRow& r, std::string_view s)
{
    if (s == "skipped")
        r.exact_state = ExactState::Skipped;
    else if (s == "budget")
        r.exact_state = ExactState::Budget;
    else {
        r.exact_state = ExactState::Value;
        r.exact = to_int(s, "exact");
    }
}

} // namespace

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool with_timing)
{
    os << kCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        os << r.a << ',' << r.m << ',' << r.region << ',' << r.C << ','
           << (r.formula ? std::to_string(*r.formula) : std::string("unknown")) << ',' << exact_field(r) << ','
           << r.status << ',' << r.witness << ',' << (with_timing ? r.ms : 0) << '\n';
    }
}

std::vector<ResultRow> parse_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw ParseError("missing CSV header '" + std::string(kCsvHeader) + "'");
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            f.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (f.size() != 9)
            throw ParseError("CSV line has " + std::to_string(f.size()) + " fields: " + line);
        ResultRow r;
        r.a = to_int(f[0], "a");
        r.m = to_int(f[1], "m");
        r.region = f[2];
        r.C = to_int(f[3], "C");
        if (f[4] != "unknown")
            r.formula = to_int(f[4], "formula");
        set_exact(r, f[5]);
        r.status = f[6];
        r.witness = f[7];
        r.ms = to_int(f[8], "ms");
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const ResultRow& r)
{
    json j{{"a", r.a}, {"m", r.m}, {"region", r.region}, {"C", r.C}};
    j["formula"] = r.formula ? json(*r.formula) : json("unknown");
    j["exact"] = r.exact_state == ExactState::Value ? json(r.exact) : json(exact_field(r));
    j["status"] = r.status;
    j["witness"] = r.witness;
    j["ms"] = r.ms;
    return j;
}

ResultRow row_from_json(const json& j)
{
    try {
        ResultRow r;
        r.a = j.at("a").get<Int>();
        r.m = j.at("m").get<Int>();
        r.region = j.at("region").get<std::string>();
        r.C = j.at("C").get<Int>();
        if (j.at("formula").is_number_integer())
            r.formula = j.at("formula").get<Int>();
        const auto& ex = j.at("exact");
        set_exact(r, ex.is_number_integer() ? std::to_string(ex.get<Int>()) : ex.get<std::string>());
        r.status = j.at("status").get<std::string>();
        r.witness = j.at("witness").get<std::string>();
        r.ms = j.at("ms").get<Int>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad result row: ") + e.what());
    }
}

void write_json(std::ostream& os, const std::vector<ResultRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

std::vector<ResultRow> parse_json(std::istream& is)
{
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON table: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("JSON table must be an array");
    std::vector<ResultRow> rows;
    for (const auto& j : doc)
        rows.push_back(row_from_json(j));
    return rows;
}

ResultRow compute_row(Int a, Int m, const TableConfig& config)
{
    const EquationInstance inst(m, a);
    const auto verdict = rado_formula(inst);
    ResultRow row;
    row.a = a;
    row.m = m;
    row.region = region_name(verdict.region);
    row.C = compute_C(inst);
    row.formula = verdict.value;
    if (config.mode == TableMode::Formula) {
        row.status = row_status::kFormula;
        return row;
    }
    if (row.C > config.max_C) {
        row.status = row_status::kSkipped;
        return row;
    }
    ExactOptions opts = config.exact;
    opts.search.threads = 1;
    const auto result = exact_rado(inst, opts);
    row.ms = static_cast<Int>(std::llround(result.stats.elapsed_ms));
    row.witness = result.witness ? result.witness->to_string() : "";
    if (result.status != ProofStatus::Proven) {
        row.exact_state = ExactState::Budget;
        row.status = row_status::kBudget;
        return row;
    }
    row.exact_state = ExactState::Value;
    row.exact = result.value;
    const bool compare = config.mode == TableMode::Both && row.formula;
    row.status = compare && *row.formula != row.exact ? row_status::kDiscrepancy : row_status::kProven;
    return row;
}

namespace {

// A reused row is compared against the current formula like a fresh one.
ResultRow recheck(ResultRow row, const TableConfig& config)
{
    const EquationInstance inst(row.m, row.a);
    const auto verdict = rado_formula(inst);
    row.region = region_name(verdict.region);
    row.C = compute_C(inst);
    row.formula = verdict.value;
    const bool compare = config.mode == TableMode::Both && row.formula;
    row.status = compare && *row.formula != row.exact ? row_status::kDiscrepancy : row_status::kProven;
    return row;
}

} // namespace

std::vector<ResultRow> run_table(const TableConfig& config, const std::vector<ResultRow>& previous,
                                 const std::function<void(const std::vector<ResultRow>&)>& on_progress)
{
    if (config.a_min > config.a_max || config.m_min > config.m_max)
        throw std::invalid_argument("empty a or m range");

    struct Cell {
        Int a;
        Int m;
    };
    std::vector<Cell> todo;
    std::vector<ResultRow> done;
    for (Int a = config.a_min; a <= config.a_max; ++a) {
        for (Int m = std::max<Int>(config.m_min, 3); m <= config.m_max; ++m) {
            auto kept = std::find_if(previous.begin(), previous.end(), [&](const ResultRow& r) {
                return r.a == a && r.m == m && r.status == row_status::kProven;
            });
            if (kept != previous.end() && config.mode != TableMode::Formula)
                done.push_back(recheck(*kept, config));
            else
                todo.push_back({a, m});
        }
    }

    auto by_cell = [](const ResultRow& l, const ResultRow& r) { return std::tie(l.a, l.m) < std::tie(r.a, r.m); };
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size())
                return;
            ResultRow row;
            try {
                row = compute_row(todo[i].a, todo[i].m, config);
            } catch (...) {
                std::scoped_lock guard(lock);
                if (!error)
                    error = std::current_exception();
                next = todo.size();
                return;
            }
            std::scoped_lock guard(lock);
            done.insert(std::upper_bound(done.begin(), done.end(), row, by_cell), std::move(row));
            if (on_progress)
                on_progress(done);
        }
    };
    std::sort(done.begin(), done.end(), by_cell);
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(todo.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (error)
        std::rethrow_exception(error);
    return done;
}

void save_rows(const std::string& path, const std::vector<ResultRow>& rows, TableFormat format)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw RadoError("cannot write " + tmp);
        if (format == TableFormat::Csv)
            write_csv(out, rows);
        else
            write_json(out, rows);
        out.flush();
        if (!out)
            throw RadoError("write to " + tmp + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw RadoError("cannot replace " + path + ": " + ec.message());
}

std::vector<ResultRow> load_rows(const std::string& path, TableFormat format)
{
    std::ifstream in(path);
    if (!in)
        return {};
    try {
        return format == TableFormat::Csv ? parse_csv(in) : parse_json(in);
    } catch (const ParseError&) {
        return {};
    }
}

} // namespace rado
