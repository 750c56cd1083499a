#include "turan/results.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "turan/graph6.hpp"
#include "turan/graph_ops.hpp"

namespace turan {

namespace {

using nlohmann::json;

bool same_key(const ExtremalRecord& a, const ExtremalRecord& b) {
  if (a.n != b.n || a.forbidden != b.forbidden || a.method != b.method) return false;
  if (a.method == SearchMethod::local_search) return a.seed == b.seed && a.budget == b.budget;
  return true;
}

std::string join(const std::vector<std::string>& names, char sep) {
  std::string out;
  for (const auto& s : names) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return number(*v);
  } else {
    return std::to_string(*v);
  }
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json record_to_json(const ExtremalRecord& r) {
  json row = {{"n", r.n},
              {"forbidden", r.forbidden},
              {"max_triangles", r.max_triangles},
              {"witness", to_graph6(r.witness)},
              {"graphs_scanned", r.graphs_scanned},
              {"method", to_string(r.method)}};
  if (r.method == SearchMethod::local_search) {
    row["seed"] = r.seed;
    row["budget"] = r.budget;
  }
  return row;
}

ExtremalRecord record_from_json(const json& row) {
  ExtremalRecord r;
  try {
    r.n = row.at("n").get<int>();
    r.forbidden = row.at("forbidden").get<std::vector<std::string>>();
    r.max_triangles = row.at("max_triangles").get<std::int64_t>();
    r.graphs_scanned = row.at("graphs_scanned").get<std::uint64_t>();
    const auto method = row.at("method").get<std::string>();
    if (method == "exhaustive") {
      r.method = SearchMethod::exhaustive;
    } else if (method == "local-search") {
      r.method = SearchMethod::local_search;
      r.seed = row.at("seed").get<std::uint64_t>();
      r.budget = row.at("budget").get<std::uint64_t>();
    } else {
      throw std::invalid_argument("unknown method '" + method + "'");
    }
    r.witness = from_graph6(row.at("witness").get<std::string>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  std::sort(r.forbidden.begin(), r.forbidden.end());
  if (r.witness.order() != r.n) throw std::invalid_argument("witness order differs from n");
  if (triangle_count(r.witness) != r.max_triangles) throw std::invalid_argument("witness triangle count differs");
  for (const auto& name : r.forbidden)
    if (contains_subgraph(r.witness, catalog_get(name))) throw std::invalid_argument("witness contains " + name);
  return r;
}

LoadedResults load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results database " + path);
  LoadedResults out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.records.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      out.warnings.push_back(path + ":" + std::to_string(lineno) + ": skipped corrupt row: " + e.what());
    }
  }
  return out;
}

std::string to_string(StoreOutcome outcome) {
  switch (outcome) {
    case StoreOutcome::appended: return "appended";
    case StoreOutcome::verified: return "verified";
    case StoreOutcome::mismatch: return "mismatch";
  }
  return "?";
}

StoreResult store_result(const std::string& path, const ExtremalRecord& record) {
  bool needs_newline = false;
  if (std::ifstream probe(path, std::ios::binary); probe) {
    for (const auto& old : load_results(path).records)
      if (same_key(old, record)) {
        const bool equal =
            old.max_triangles == record.max_triangles && to_graph6(old.witness) == to_graph6(record.witness);
        return {equal ? StoreOutcome::verified : StoreOutcome::mismatch, old};
      }
    probe.seekg(0, std::ios::end);
    if (probe.tellg() > 0) {
      probe.seekg(-1, std::ios::end);
      needs_newline = probe.get() != '\n';
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write results database " + path);
  if (needs_newline) out << '\n';
  out << record_to_json(record).dump() << '\n';
  if (!out) throw std::runtime_error("write failed on " + path);
  return {StoreOutcome::appended, std::nullopt};
}

std::optional<std::string> default_results_path() {
  const char* env = std::getenv(kResultsDbEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

ReportTable report_table(std::span<const ExtremalRecord> records) {
  std::map<std::pair<std::vector<std::string>, int>, ReportRow> rows;
  for (const auto& r : records) {
    auto& row = rows[{r.forbidden, r.n}];
    row.n = r.n;
    row.forbidden = r.forbidden;
    auto& slot = r.method == SearchMethod::exhaustive ? row.exact : row.heuristic;
    slot = std::max(slot.value_or(r.max_triangles), r.max_triangles);
  }
  ReportTable table;
  for (auto& [key, row] : rows) {
    row.construction = construction_baseline(row.n, row.forbidden);
    ExtremalRecord probe;
    probe.n = row.n;
    probe.forbidden = row.forbidden;
    probe.max_triangles = row.exact.value_or(row.heuristic.value_or(0));
    try {
      for (const auto& check : verify_bounds(probe))
        if (check.upper) row.upper_bound = std::min(row.upper_bound.value_or(check.bound), check.bound);
    } catch (const UnsupportedBound&) {
    }
    if (row.upper_bound) row.slack = *row.upper_bound - static_cast<double>(probe.max_triangles);
    table.rows.push_back(row);
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const auto& a = table.rows[i - 1];
    const auto& b = table.rows[i];
    if (a.forbidden == b.forbidden && a.exact && b.exact && *b.exact < *a.exact)
      table.monotonicity_violations.push_back(join(a.forbidden, ';') + ": ex(" + std::to_string(b.n) +
                                              ") = " + std::to_string(*b.exact) + " < ex(" + std::to_string(a.n) +
                                              ") = " + std::to_string(*a.exact));
  }
  return table;
}

std::string to_csv(const ReportTable& table) {
  std::ostringstream out;
  out << kReportColumns << '\n';
  for (const auto& row : table.rows)
    out << row.n << ',' << csv_field(join(row.forbidden, ';')) << ',' << optional_field(row.exact) << ','
        << optional_field(row.heuristic) << ',' << optional_field(row.construction) << ','
        << optional_field(row.upper_bound) << ',' << optional_field(row.slack) << '\n';
  return out.str();
}

json to_json(const ReportTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"n", row.n},
                    {"forbidden", row.forbidden},
                    {"exact", optional_json(row.exact)},
                    {"heuristic", optional_json(row.heuristic)},
                    {"construction", optional_json(row.construction)},
                    {"upper_bound", optional_json(row.upper_bound)},
                    {"slack", optional_json(row.slack)}});
  return {{"rows", rows}, {"monotonicity_violations", table.monotonicity_violations}};
}

}  // namespace turan
