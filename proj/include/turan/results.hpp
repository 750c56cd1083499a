#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/extremal.hpp"

namespace turan {

/// Environment variable naming the default results database.
inline constexpr const char* kResultsDbEnv = "TURAN_RESULTS_DB";

/// JSON-lines row: n, forbidden, max_triangles, witness (graph6),
/// graphs_scanned, method, and seed/budget for local search.
nlohmann::json record_to_json(const ExtremalRecord& record);

/// Parses and re-verifies a row: the witness must have order n, exactly
/// max_triangles triangles and no forbidden copy. Throws std::invalid_argument
/// describing the first problem.
ExtremalRecord record_from_json(const nlohmann::json& row);

struct LoadedResults {
  std::vector<ExtremalRecord> records;
  std::vector<std::string> warnings;  // one per skipped row
};

/// Reads a JSON-lines database, skipping blank lines and reporting corrupt
/// rows. Throws std::runtime_error if the file cannot be opened.
LoadedResults load_results(const std::string& path);

enum class StoreOutcome { appended, verified, mismatch };

std::string to_string(StoreOutcome outcome);

struct StoreResult {
  StoreOutcome outcome = StoreOutcome::appended;
  std::optional<ExtremalRecord> existing;  // the row a rerun was compared with
};

/// Appends `record` unless a row with the same key exists. The key is
/// (n, forbidden, method), plus (seed, budget) for local search. An existing
/// row is never overwritten: equal value and witness give `verified`,
/// anything else `mismatch`. A missing file is created.
StoreResult store_result(const std::string& path, const ExtremalRecord& record);

/// $TURAN_RESULTS_DB when set and non-empty.
std::optional<std::string> default_results_path();

/// One row per (forbidden, n), ordered by forbidden then n.
struct ReportRow {
  int n = 0;
  std::vector<std::string> forbidden;
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> heuristic;  // best local-search value
  std::optional<std::int64_t> construction;
  std::optional<double> upper_bound;  // tightest closed-form upper bound
  std::optional<double> slack;        // upper_bound minus the best value
};

struct ReportTable {
  std::vector<ReportRow> rows;
  // Pairs of exact values that decrease in n for one forbidden set.
  std::vector<std::string> monotonicity_violations;
};

inline constexpr const char* kReportColumns = "n,forbidden,exact,heuristic,construction,upper_bound,slack";

ReportTable report_table(std::span<const ExtremalRecord> records);

/// Header plus one line per row. Forbidden names are joined with ';' and the
/// field is quoted when it contains a comma.
std::string to_csv(const ReportTable& table);

nlohmann::json to_json(const ReportTable& table);

}  // namespace turan
