#include "turan/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/cleaning.hpp"
#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/graph6.hpp"
#include "turan/graph_ops.hpp"
#include "turan/pattern.hpp"
#include "turan/results.hpp"
#include "turan/structure.hpp"

#ifndef TURAN_VERSION
#define TURAN_VERSION "0.0.0"
#endif

namespace turan::cli {

namespace {

using nlohmann::json;

// A failed check reported by a command; maps to kExitFailure.
struct CheckFailed {
  std::string message;
};

json to_json(const Edge& e) { return json::array({e.u, e.v}); }
json to_json(const Triangle& t) { return json::array({t.a, t.b, t.c}); }

template <class T>
json to_json_list(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

template <class T>
std::string joined(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? sep : "") << xs[i];
  return s.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed on " + path);
}

class Runner {
 public:
  Runner(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err) {}

  int run();

 private:
  // Options shared by several subcommands.
  struct Options {
    int n = 0;
    int k = 0;
    int root = 0;
    std::string family;
    std::string in;
    std::string out;
    std::string forbid;
    std::string target = "p4hat";
    std::string law;
    std::string report;
    std::string trace;
    std::string db;
    bool exact = false;
    bool greedy = false;
    bool local = false;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
  };

  int construct();
  int check();
  int count();
  int blocks();
  int pack();
  int levels();
  int clean();
  int certify();
  int search();
  int report();

  std::vector<Graph> read_input() const;
  Graph read_single() const;
  void emit(const json& j, const std::string& text) const;
  void write_output(const std::string& path, const std::string& content);
  json base_config() const;

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  int max_vertices_ = Graph::kMaxVertices;
  int threads_ = 1;
  Options o_;
  json config_ = json::object();
};

std::vector<Graph> Runner::read_input() const {
  std::ifstream in(o_.in);
  if (!in) throw std::runtime_error("cannot open " + o_.in);
  auto graphs = read_graph6(in);
  if (graphs.empty()) throw std::invalid_argument(o_.in + ": no graphs");
  for (const Graph& g : graphs)
    if (g.order() > max_vertices_)
      throw std::invalid_argument(o_.in + ": order " + std::to_string(g.order()) + " exceeds --max-vertices " +
                                  std::to_string(max_vertices_));
  return graphs;
}

Graph Runner::read_single() const {
  auto graphs = read_input();
  if (graphs.size() != 1) throw std::invalid_argument(o_.in + ": expected exactly one graph");
  return graphs.front();
}

void Runner::emit(const json& j, const std::string& text) const {
  if (json_) {
    out_ << j.dump(2) << '\n';
  } else {
    out_ << text;
  }
}

json Runner::base_config() const {
  json c = config_;
  c["max_vertices"] = max_vertices_;
  c["threads"] = threads_;
  return c;
}

// Writes a primary output and its `<path>.manifest.json` companion.
void Runner::write_output(const std::string& path, const std::string& content) {
  write_file(path, content);
  json inputs = json::array();
  if (!o_.in.empty()) inputs.push_back({{"path", o_.in}, {"sha256", sha256_file(o_.in)}});
  json manifest = {{"command", args_},
                   {"tool_version", TURAN_VERSION},
                   {"config", base_config()},
                   {"inputs", inputs},
                   {"output", {{"path", path}, {"sha256", sha256_file(path)}}},
                   {"timestamp", utc_timestamp()}};
  write_file(path + ".manifest.json", manifest.dump(2) + "\n");
}

int Runner::construct() {
  ConstructionSpec spec;
  if (o_.family == "hn") {
    spec.family = Family::hn;
  } else if (o_.family == "fnk") {
    spec.family = Family::fnk;
    spec.k = o_.k;
  } else {
    throw std::invalid_argument("unknown family '" + o_.family + "' (valid: hn, fnk)");
  }
  spec.n = o_.n;
  if (spec.n > max_vertices_) throw std::invalid_argument("n exceeds --max-vertices");
  const Graph g = build_construction(spec);
  const auto rep = verify_construction(spec);
  const std::string line = to_graph6(g) + "\n";
  if (!o_.out.empty()) write_output(o_.out, line);

  json free = json::object();
  std::ostringstream text;
  if (o_.out.empty() && !json_) out_ << line;
  std::ostream& summary = o_.out.empty() ? err_ : out_;
  text << o_.family << " n=" << spec.n;
  if (spec.family == Family::fnk) text << " k=" << spec.k;
  text << " edges=" << rep.edges << " triangles=" << rep.triangles << " formula=" << rep.formula << '\n';
  for (const auto& [name, ok] : rep.freeness) {
    free[name] = ok;
    text << "  " << name << ": " << (ok ? "yes" : "no") << '\n';
  }
  if (json_) {
    out_ << json{{"family", o_.family},       {"n", spec.n},
                 {"k", spec.k},               {"graph6", to_graph6(g)},
                 {"edges", rep.edges},        {"triangles", rep.triangles},
                 {"formula", rep.formula},    {"free", free},
                 {"ok", rep.ok()}}
                .dump(2)
         << '\n';
  } else {
    summary << text.str();
  }
  if (!rep.ok()) throw CheckFailed{"construction does not match its formula or freeness claims"};
  return kExitOk;
}

int Runner::check() {
  const auto graphs = read_input();
  const auto forbidden = o_.forbid.empty() ? std::vector<Pattern>{} : parse_pattern_list(o_.forbid);
  json rows = json::array();
  std::ostringstream text;
  bool all_free = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    json row = {{"index", i}, {"n", g.order()}, {"edges", g.edge_count()}, {"triangles", triangle_count(g)}};
    text << "graph " << i << ": n=" << g.order() << " edges=" << g.edge_count() << " triangles=" << triangle_count(g)
         << '\n';
    json found = json::object();
    for (const Pattern& p : forbidden) {
      const auto w = find_embedding(g, p);
      found[p.name] = w ? json(*w) : json(nullptr);
      text << "  " << p.name << ": " << (w ? "contains at " + joined(*w, ",") : std::string("free")) << '\n';
      all_free = all_free && !w;
    }
    row["witnesses"] = found;
    rows.push_back(row);
  }
  emit({{"graphs", rows}, {"free", all_free}}, text.str());
  if (!all_free) throw CheckFailed{"a forbidden pattern is present"};
  return kExitOk;
}

int Runner::count() {
  const auto forbidden = o_.forbid.empty() ? std::vector<Pattern>{} : parse_pattern_list(o_.forbid);
  const auto graphs = forbidden.empty() ? enumerate_graphs(o_.n, threads_)
                                        : enumerate_free_graphs(o_.n, forbidden, threads_);
  emit({{"n", o_.n}, {"forbid", o_.forbid}, {"count", graphs.size()}}, std::to_string(graphs.size()) + "\n");
  return kExitOk;
}

int Runner::blocks() {
  json rows = json::array();
  std::ostringstream text;
  std::size_t i = 0;
  for (const Graph& g : read_input()) {
    const auto d = triangle_blocks(g);
    json bl = json::array();
    text << "graph " << i << ": " << d.blocks.size() << " triangle blocks, " << d.uncovered.size()
         << " edges in no triangle\n";
    for (const auto& b : d.blocks) {
      const auto s = is_book(b, g);
      bl.push_back({{"edges", to_json_list(b)}, {"book", s ? json(*s) : json(nullptr)}});
      std::vector<std::string> es;
      for (const Edge& e : b) es.push_back(edge_text(e));
      text << "  " << (s ? "book B" + std::to_string(*s) : std::string("not a book")) << ": " << joined(es, " ")
           << '\n';
    }
    rows.push_back({{"index", i++}, {"blocks", bl}, {"uncovered", to_json_list(d.uncovered)}});
  }
  emit({{"graphs", rows}}, text.str());
  return kExitOk;
}

int Runner::pack() {
  PackingOptions options;
  options.force_greedy = o_.greedy;
  json rows = json::array();
  std::ostringstream text;
  std::size_t i = 0;
  for (const Graph& g : read_input()) {
    const auto p = max_edge_disjoint_triangles(g, options);
    std::vector<std::string> ts;
    for (const Triangle& t : p.triangles)
      ts.push_back(std::to_string(t.a) + "-" + std::to_string(t.b) + "-" + std::to_string(t.c));
    text << "graph " << i << ": " << p.triangles.size() << " triangles (" << (p.exact ? "exact" : "greedy")
         << "): " << joined(ts, " ") << '\n';
    rows.push_back({{"index", i++}, {"size", p.triangles.size()}, {"exact", p.exact},
                    {"triangles", to_json_list(p.triangles)}});
  }
  emit({{"graphs", rows}}, text.str());
  return kExitOk;
}

int Runner::levels() {
  if (o_.k < 2) throw std::invalid_argument("--k must be at least 2");
  const auto cycle = catalog_get("cycle:" + std::to_string(2 * o_.k));
  json rows = json::array();
  std::ostringstream text;
  bool falsified = false;
  std::size_t i = 0;
  for (const Graph& g : read_input()) {
    if (o_.root < 0 || o_.root >= g.order()) throw std::invalid_argument("--root outside the graph");
    const auto lv = bfs_levels(g, o_.root);
    const auto bad = check_level_inequalities(lv, o_.k);
    const bool cycle_free = !contains_subgraph(g, cycle);
    falsified = falsified || (cycle_free && !bad.empty());
    json sizes = json::array();
    std::vector<int> sz;
    for (const auto& l : lv.levels) {
      sizes.push_back(l.size());
      sz.push_back(l.size());
    }
    json viol = json::array();
    text << "graph " << i << ": level sizes " << joined(sz, " ") << "; e(L_i) " << joined(lv.within, " ")
         << "; e(L_i,L_i+1) " << joined(lv.between, " ") << '\n';
    for (const auto& v : bad) {
      viol.push_back({{"level", v.level}, {"between", v.between}, {"value", v.value}, {"bound", v.bound}});
      text << "  level " << v.level << (v.between ? " e(L_i,L_i+1) = " : " e(L_i) = ") << v.value << " > "
           << v.bound << '\n';
    }
    text << "  " << cycle.name << "-free: " << (cycle_free ? "yes" : "no") << ", violations: " << bad.size() << '\n';
    rows.push_back({{"index", i++},
                    {"root", o_.root},
                    {"sizes", sizes},
                    {"within", lv.within},
                    {"between", lv.between},
                    {"cycle_free", cycle_free},
                    {"violations", viol}});
  }
  emit({{"k", o_.k}, {"graphs", rows}}, text.str());
  if (falsified) throw CheckFailed{"level inequality fails on a graph without the even cycle"};
  return kExitOk;
}

int Runner::clean() {
  if (o_.target != "p4hat") throw std::invalid_argument("unknown target '" + o_.target + "' (valid: p4hat)");
  const Graph g = read_single();
  const auto result = clean_for_p4hat(g);
  json steps = json::array();
  for (const auto& s : result.report.steps)
    steps.push_back({{"step", s.step},
                     {"pattern", s.pattern},
                     {"witness", s.witness},
                     {"edges", to_json_list(s.deleted)},
                     {"t_before", s.triangles_before},
                     {"t_after", s.triangles_after}});
  std::vector<Pattern> targets;
  for (const auto& name : p4hat_cleaning_steps()) targets.push_back(catalog_get(name));
  const bool clean_ok = is_free(result.graph, targets);
  const json rep = {{"steps", steps},
                    {"totals",
                     {{"steps", result.report.steps.size()},
                      {"edges_deleted", result.report.edges_deleted()},
                      {"triangles_lost", result.report.triangles_lost()},
                      {"t_before", triangle_count(g)},
                      {"t_after", triangle_count(result.graph)},
                      {"e_before", g.edge_count()},
                      {"e_after", result.graph.edge_count()}}},
                    {"output", to_graph6(result.graph)},
                    {"targets_free", clean_ok}};
  if (!o_.report.empty()) write_output(o_.report, rep.dump(2) + "\n");
  if (!o_.out.empty()) write_output(o_.out, to_graph6(result.graph) + "\n");
  std::ostringstream text;
  text << "deleted " << result.report.edges_deleted() << " edges in " << result.report.steps.size()
       << " steps, triangles " << triangle_count(g) << " -> " << triangle_count(result.graph) << '\n'
       << to_graph6(result.graph) << '\n';
  emit(rep, text.str());
  if (!clean_ok) throw CheckFailed{"cleaned graph still contains a target pattern"};
  return kExitOk;
}

int Runner::certify() {
  const Graph g = read_single();
  Certificate cert;
  if (o_.law == "half") {
    cert = certify_half(g);
  } else if (o_.law == "unit") {
    cert = certify_unit(g);
  } else {
    throw std::invalid_argument("unknown law '" + o_.law + "' (valid: half, unit)");
  }
  const auto replay = replay_certificate(g, cert);
  json trace = json::array();
  for (const auto& e : cert.trace)
    trace.push_back({{"rule", e.rule},
                     {"witness", e.witness},
                     {"removed", to_json_list(e.removed)},
                     {"delta_triangles", e.delta_triangles},
                     {"delta_edges", e.delta_edges}});
  json counter = nullptr;
  if (cert.counterexample) {
    const auto& c = *cert.counterexample;
    counter = {{"entry", c.entry}, {"rule", c.rule}, {"reason", c.reason}, {"graph6", c.graph6},
               {"witness", c.witness}};
  }
  const json doc = {{"law", o_.law},
                    {"kind", to_string(cert.kind)},
                    {"input", to_graph6(g)},
                    {"triangles", cert.triangles},
                    {"edges", cert.edges},
                    {"terminal_triangles", cert.terminal_triangles},
                    {"terminal_edges", cert.terminal_edges},
                    {"conclusion", cert.conclusion()},
                    {"ok", cert.ok()},
                    {"trace", trace},
                    {"counterexample", counter},
                    {"replay_error", replay ? json(*replay) : json(nullptr)}};
  if (!o_.trace.empty()) write_output(o_.trace, doc.dump(2) + "\n");
  std::ostringstream text;
  if (cert.ok()) {
    text << "certified " << cert.conclusion() << " in " << cert.trace.size() << " steps\n";
  } else {
    const auto& c = *cert.counterexample;
    text << "counterexample at step " << c.entry << " (" << c.rule << "): " << c.reason << " on " << c.graph6
         << " witness " << joined(c.witness, ",") << '\n';
  }
  if (replay) text << "replay failed: " << *replay << '\n';
  emit(doc, text.str());
  if (!cert.ok() || replay) throw CheckFailed{"certificate did not verify"};
  return kExitOk;
}

int Runner::search() {
  if (o_.n > max_vertices_) throw std::invalid_argument("n exceeds --max-vertices");
  const auto forbidden = parse_pattern_list(o_.forbid);
  ExtremalRecord rec;
  if (o_.local) {
    rec = local_search_lower_bound(o_.n, forbidden, o_.budget, o_.seed);
  } else {
    ExactOptions options;
    options.threads = threads_;
    rec = exact_extremal(o_.n, forbidden, options);
  }
  json row = record_to_json(rec);
  std::ostringstream text;
  text << "ex(" << rec.n << ", K3, {" << joined(rec.forbidden, ", ") << "}) "
       << (rec.method == SearchMethod::exhaustive ? "= " : ">= ") << rec.max_triangles << " (" << to_string(rec.method)
       << ", witness " << to_graph6(rec.witness) << ", scanned " << rec.graphs_scanned << ")\n";
  bool consistent = true;
  json bounds = nullptr;
  try {
    const auto checks = verify_bounds(rec);
    consistent = bounds_consistent(rec, checks);
    bounds = json::array();
    for (const auto& c : checks) {
      bounds.push_back(
          {{"name", c.name}, {"upper", c.upper}, {"bound", c.bound}, {"holds", c.holds}, {"slack", c.slack}});
      text << "  " << c.name << (c.upper ? " <= " : " >= ") << c.bound << ": " << (c.holds ? "holds" : "fails")
           << ", slack " << c.slack << '\n';
    }
  } catch (const UnsupportedBound&) {
    text << "  no closed-form bounds for this forbidden set\n";
  }
  std::string db = o_.db;
  if (db.empty()) db = default_results_path().value_or("");
  json stored = nullptr;
  bool mismatch = false;
  if (!db.empty()) {
    const auto s = store_result(db, rec);
    stored = to_string(s.outcome);
    mismatch = s.outcome == StoreOutcome::mismatch;
    text << "  database " << db << ": " << to_string(s.outcome) << '\n';
    json inputs = json::array({{{"path", db}, {"sha256", sha256_file(db)}}});
    json manifest = {{"command", args_},   {"tool_version", TURAN_VERSION}, {"config", base_config()},
                     {"inputs", inputs},   {"output", {{"path", db}, {"sha256", sha256_file(db)}}},
                     {"timestamp", utc_timestamp()}};
    write_file(db + ".manifest.json", manifest.dump(2) + "\n");
  }
  emit({{"record", row}, {"bounds", bounds}, {"consistent", consistent}, {"database", stored}}, text.str());
  if (!consistent) throw CheckFailed{"record violates a closed-form bound"};
  if (mismatch) throw CheckFailed{"rerun disagrees with the stored record"};
  return kExitOk;
}

int Runner::report() {
  std::string db = o_.db;
  if (db.empty()) db = default_results_path().value_or("");
  if (db.empty()) throw std::invalid_argument(std::string("no database: pass --db or set ") + kResultsDbEnv);
  o_.in = db;
  const auto loaded = load_results(db);
  for (const auto& w : loaded.warnings) err_ << "warning: " << w << '\n';
  const auto table = report_table(loaded.records);
  const std::string csv = to_csv(table);
  if (!o_.out.empty()) write_output(o_.out, csv);
  json doc = to_json(table);
  doc["warnings"] = loaded.warnings.size();
  if (o_.out.empty() || json_) emit(doc, csv);
  for (const auto& v : table.monotonicity_violations) err_ << "monotonicity violation: " << v << '\n';
  err_ << "rows " << table.rows.size() << ", warnings " << loaded.warnings.size() << '\n';
  if (!table.monotonicity_violations.empty()) throw CheckFailed{"exact values decrease in n"};
  return kExitOk;
}

int Runner::run() {
  CLI::App app{"Triangle counts in graphs without a forbidden pattern", "turan"};
  app.set_version_flag("--version", TURAN_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-vertices", max_vertices_, "Largest accepted graph order")
      ->check(CLI::Range(1, Graph::kMaxVertices));
  app.add_option("--threads", threads_, "Workers for exhaustive search")->check(CLI::Range(1, 256));
  app.add_flag("--json", json_, "Machine-readable output on stdout");

  auto* construct_cmd = app.add_subcommand("construct", "Build H_n or F_{n,k} and write graph6");
  construct_cmd->add_option("--family", o_.family, "hn or fnk")->required()->check(CLI::IsMember({"hn", "fnk"}));
  construct_cmd->add_option("--n", o_.n, "Order")->required();
  construct_cmd->add_option("--k", o_.k, "Suspended path length (fnk)");
  construct_cmd->add_option("--out", o_.out, "graph6 output file");

  auto* check_cmd = app.add_subcommand("check", "Counts and forbidden-pattern witnesses for each input graph");
  check_cmd->add_option("--in", o_.in, "graph6 file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--forbid", o_.forbid, "Comma separated pattern names");

  auto* count_cmd = app.add_subcommand("count", "Isomorphism classes on n vertices");
  count_cmd->add_option("--n", o_.n, "Order")->required();
  count_cmd->add_option("--forbid", o_.forbid, "Only classes free of these patterns");

  auto* blocks_cmd = app.add_subcommand("blocks", "Triangle blocks and book recognition");
  blocks_cmd->add_option("--in", o_.in, "graph6 file")->required()->check(CLI::ExistingFile);

  auto* pack_cmd = app.add_subcommand("pack", "Edge-disjoint triangle packing");
  pack_cmd->add_option("--in", o_.in, "graph6 file")->required()->check(CLI::ExistingFile);
  auto* exact_pack = pack_cmd->add_flag("--exact", o_.exact, "Branch and bound (default)");
  pack_cmd->add_flag("--greedy", o_.greedy, "Minimum-degree greedy")->excludes(exact_pack);

  auto* levels_cmd = app.add_subcommand("levels", "Breadth-first levels and their edge inequalities");
  levels_cmd->add_option("--in", o_.in, "graph6 file")->required()->check(CLI::ExistingFile);
  levels_cmd->add_option("--root", o_.root, "Root vertex")->required();
  levels_cmd->add_option("--k", o_.k, "Cycle half-length")->required();

  auto* clean_cmd = app.add_subcommand("clean", "Delete edges until the dense targets are gone");
  clean_cmd->add_option("--target", o_.target, "Cleaning target")->check(CLI::IsMember({"p4hat"}));
  clean_cmd->add_option("--in", o_.in, "graph6 file with one graph")->required()->check(CLI::ExistingFile);
  clean_cmd->add_option("--report", o_.report, "JSON report file");
  clean_cmd->add_option("--out", o_.out, "graph6 file for the cleaned graph");

  auto* certify_cmd = app.add_subcommand("certify", "Replay t <= e/2 or t <= e on a graph");
  certify_cmd->add_option("--law", o_.law, "half or unit")->required()->check(CLI::IsMember({"half", "unit"}));
  certify_cmd->add_option("--in", o_.in, "graph6 file with one graph")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--trace", o_.trace, "JSON certificate file");

  auto* search_cmd = app.add_subcommand("search", "Exact or heuristic ex(n, K3, F)");
  search_cmd->add_option("--n", o_.n, "Order")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--forbid", o_.forbid, "Comma separated pattern names")->required();
  auto* exact = search_cmd->add_flag("--exact", o_.exact, "Exhaustive search (default)");
  auto* local = search_cmd->add_flag("--local", o_.local, "Local search lower bound")->excludes(exact);
  search_cmd->add_option("--budget", o_.budget, "Freeness tests for local search")->needs(local);
  search_cmd->add_option("--seed", o_.seed, "Seed for local search")->needs(local);
  search_cmd->add_option("--db", o_.db, std::string("Results database (default $") + kResultsDbEnv + ")");

  auto* report_cmd = app.add_subcommand("report", "CSV table over a results database");
  report_cmd->add_option("--db", o_.db, std::string("Results database (default $") + kResultsDbEnv + ")");
  report_cmd->add_option("--out", o_.out, "CSV output file");

  std::vector<const char*> argv{"turan"};
  for (const auto& a : args_) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    if (code == 0) return kExitOk;
    if (app.get_subcommands().empty()) {
      err_ << "valid subcommands:";
      for (const auto* s : app.get_subcommands({})) err_ << ' ' << s->get_name();
      err_ << '\n';
    }
    return kExitUsage;
  }

  const auto* sub = app.get_subcommands().front();
  for (const auto* opt : sub->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty() && opt->get_lnames().front() != "help")
      config_[opt->get_lnames().front()] = opt->as<std::string>();

  const std::string name = sub->get_name();
  try {
    if (name == "construct") return construct();
    if (name == "check") return check();
    if (name == "count") return count();
    if (name == "blocks") return blocks();
    if (name == "pack") return pack();
    if (name == "levels") return levels();
    if (name == "clean") return clean();
    if (name == "certify") return certify();
    if (name == "search") return search();
    return report();
  } catch (const CheckFailed& e) {
    err_ << "check failed: " << e.message << '\n';
    return kExitFailure;
  } catch (const PreconditionViolation& e) {
    err_ << "precondition violated: " << e.what() << " (pattern " << e.pattern() << ", witness "
         << joined(e.witness(), ",") << ")\n";
    return kExitFailure;
  } catch (const ProofViolation& e) {
    err_ << "proof step failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err_ << "check failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed on " + path);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(args, out, err).run();
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace turan::cli
