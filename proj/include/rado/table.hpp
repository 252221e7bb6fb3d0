#pragma once

// Sweeps over an (a, m) grid producing one ResultRow per cell, with CSV/JSON
// serialization and resume from a previous (possibly partial) output file.

#include "rado/core.hpp"
#include "rado/search.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

enum class TableMode { Formula, Exact, Both };
enum class TableFormat { Csv, Json };

std::optional<TableMode> parse_table_mode(std::string_view s) noexcept;
std::optional<TableFormat> parse_table_format(std::string_view s) noexcept;

enum class ExactState { Value, Skipped, Budget };

namespace row_status {
inline constexpr std::string_view kProven = "Proven";
inline constexpr std::string_view kFormula = "formula";
inline constexpr std::string_view kSkipped = "skipped";
inline constexpr std::string_view kBudget = "budget";
inline constexpr std::string_view kDiscrepancy = "DISCREPANCY";
} // namespace row_status

struct ResultRow {
    Int a = 0;
    Int m = 0;
    std::string region;
    Int C = 0;
    std::optional<Int> formula;
    ExactState exact_state = ExactState::Skipped;
    Int exact = 0; // meaningful when exact_state == Value
    std::string status;
    std::string witness;
    Int ms = 0;

    bool discrepancy() const noexcept { return status == row_status::kDiscrepancy; }
    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "a,m,region,C,formula,exact,status,witness,ms";

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool with_timing = true);
/// Throws ParseError on a bad header or malformed line.
std::vector<ResultRow> parse_csv(std::istream& is);

nlohmann::json to_json(const ResultRow& row);
ResultRow row_from_json(const nlohmann::json& j);
void write_json(std::ostream& os, const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_json(std::istream& is);

struct TableConfig {
    Int a_min = 3;
    Int a_max = 6;
    Int m_min = 3;
    Int m_max = 40;
    TableMode mode = TableMode::Both;
    /// Cells whose C(m,a) exceeds this are not searched.
    Int max_C = 22;
    ExactOptions exact;
    /// Cells processed concurrently; each search itself runs single-threaded.
    unsigned threads = 1;
};

/// One cell. Throws std::invalid_argument when (m, a) is not an instance.
ResultRow compute_row(Int a, Int m, const TableConfig& config);

/// All cells sorted by (a, m). Rows in `previous` with status Proven keep their exact value
/// and witness; their formula columns and status are recomputed.
/// `on_progress` receives the rows known so far (sorted) after each new cell.
std::vector<ResultRow> run_table(const TableConfig& config, const std::vector<ResultRow>& previous = {},
                                 const std::function<void(const std::vector<ResultRow>&)>& on_progress = {});

/// Writes rows to `path` through a temporary file and rename. Throws RadoError if unwritable.
void save_rows(const std::string& path, const std::vector<ResultRow>& rows, TableFormat format);
/// Rows from an existing file, or empty when missing or unreadable.
std::vector<ResultRow> load_rows(const std::string& path, TableFormat format);

} // namespace rado
