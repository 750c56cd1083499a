#include "turan/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "turan/graph_ops.hpp"

namespace turan {

namespace {

constexpr int pair_bit(int i, int j) { return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j; }

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxEnumerationOrder));
  }
}

// Individualization-refinement over the adjacency masks of a small graph.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).word_at(0);
  }

  CanonicalForm run() {
    std::array<int, kMaxEnumerationOrder> cell{};
    refine(cell);
    search(cell);
    CanonicalForm out;
    out.code = best_code_;
    out.position.assign(best_position_.begin(), best_position_.begin() + n_);
    return out;
  }

 private:
  using Cells = std::array<int, kMaxEnumerationOrder>;

  // Splits cells by neighbor counts per cell until stable. Cells keep their
  // relative order, so the result is labeling-invariant.
  void refine(Cells& cell) const {
    int count = renumber(cell, [&](int v) { return std::vector<int>{cell[static_cast<std::size_t>(v)]}; });
    while (true) {
      const Cells snapshot = cell;
      const int next = renumber(cell, [&](int v) {
        std::vector<int> sig(static_cast<std::size_t>(count) + 1, 0);
        sig[0] = snapshot[static_cast<std::size_t>(v)];
        for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
          ++sig[static_cast<std::size_t>(snapshot[static_cast<std::size_t>(std::countr_zero(m))]) + 1];
        }
        return sig;
      });
      if (next == count) return;
      count = next;
    }
  }

  template <class Signature>
  int renumber(Cells& cell, Signature&& signature) const {
    std::vector<std::pair<std::vector<int>, int>> sigs;
    for (int v = 0; v < n_; ++v) sigs.emplace_back(signature(v), v);
    std::sort(sigs.begin(), sigs.end());
    int rank = -1;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (i == 0 || sigs[i].first != sigs[i - 1].first) ++rank;
      cell[static_cast<std::size_t>(sigs[i].second)] = rank;
    }
    return rank + 1;
  }

  void search(const Cells& cell) {
    // Smallest non-singleton cell, first by index among ties.
    std::array<int, kMaxEnumerationOrder> size{};
    for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(cell[static_cast<std::size_t>(v)])];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) {
        target = c;
      }
    }
    if (target < 0) {
      leaf(cell);
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < n_; ++v) {
      if (cell[static_cast<std::size_t>(v)] == target) members.push_back(v);
    }
    // Mutual twins are interchangeable by an automorphism: one branch suffices.
    bool twins = true;
    for (std::size_t i = 0; i < members.size() && twins; ++i) {
      for (std::size_t j = i + 1; j < members.size() && twins; ++j) {
        const int u = members[i], w = members[j];
        const std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;
        twins = (adj_[static_cast<std::size_t>(u)] & ~bw) == (adj_[static_cast<std::size_t>(w)] & ~bu);
      }
    }
    if (twins) members.resize(1);
    for (int v : members) {
      Cells next = cell;
      renumber(next, [&](int u) {
        const int c = cell[static_cast<std::size_t>(u)];
        return std::vector<int>{2 * c + (c == target && u != v ? 1 : 0)};
      });
      refine(next);
      search(next);
    }
  }

  void leaf(const Cells& cell) {
    std::uint64_t code = 0;
    for (int u = 0; u < n_; ++u) {
      for (std::uint64_t m = adj_[static_cast<std::size_t>(u)]; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (w > u) code |= std::uint64_t{1} << pair_bit(cell[static_cast<std::size_t>(u)], cell[static_cast<std::size_t>(w)]);
      }
    }
    if (!have_ || code > best_code_) {
      have_ = true;
      best_code_ = code;
      best_position_ = cell;
    }
  }

  int n_;
  std::array<std::uint64_t, kMaxEnumerationOrder> adj_{};
  bool have_ = false;
  std::uint64_t best_code_ = 0;
  Cells best_position_{};
};

VertexSet mask_set(std::uint64_t mask) {
  VertexSet s;
  for (; mask; mask &= mask - 1) s.insert(std::countr_zero(mask));
  return s;
}

// Runs body(i) for i in [0, count) on `threads` workers, each with its own
// worker index.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, int)>& body) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) body(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

using Keep = std::function<bool(const Graph&)>;

// Canonical codes of the children of `parents` (order n-1) that pass `keep`.
std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents, int n, const Keep& keep,
                                      int threads) {
  const int workers = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
  parallel_for(parents.size(), workers, [&](std::size_t i, int w) {
    const Graph p = graph_from_code(n - 1, parents[i]);
    auto& out = found[static_cast<std::size_t>(w)];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const Graph child = p.with_vertex(mask_set(mask));
      if (keep && !keep(child)) continue;
      out.push_back(canonical_form(child).code);
    }
  });
  std::vector<std::uint64_t> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Keep freeness_filter(std::span<const Pattern> forbidden) {
  if (forbidden.empty()) return {};
  std::vector<Pattern> patterns(forbidden.begin(), forbidden.end());
  return [patterns](const Graph& child) {
    const int x = child.order() - 1;
    for (const Pattern& p : patterns) {
      if (contains_subgraph_through_vertex(child, p, x)) return false;
    }
    return true;
  };
}

std::vector<std::uint64_t> levels_up_to(int n, const Keep& keep, int threads) {
  std::vector<std::uint64_t> level{0};  // the single vertex
  for (int m = 2; m <= n; ++m) level = next_level(level, m, keep, threads);
  return level;
}

std::vector<std::string> sorted_names(std::span<const Pattern> forbidden) {
  std::vector<std::string> names;
  for (const Pattern& p : forbidden) names.push_back(p.name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

// k for a forbidden set that is exactly one suspended path P_k.
std::optional<int> suspended_path(std::span<const std::string> names) {
  constexpr std::string_view prefix = "suspension:path:";
  if (names.size() != 1 || !names[0].starts_with(prefix)) return std::nullopt;
  try {
    return std::stoi(names[0].substr(prefix.size()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

enum class PatternFamily { suspended_path, k1ab, suspended_even_cycle };

struct Classified {
  PatternFamily family;
  int k = 0;  // path length or half cycle length
  int a = 0;  // K_{1,a,b}
  int b = 0;
};

std::optional<Classified> classify(std::span<const std::string> names) {
  if (auto k = suspended_path(names); k && *k >= 3) return Classified{PatternFamily::suspended_path, *k, 0, 0};
  if (names.size() != 1) return std::nullopt;
  const std::string& s = names[0];
  if (s == "k122" || s == "w4") return Classified{PatternFamily::k1ab, 0, 2, 2};
  constexpr std::string_view kb = "suspension:complete-bipartite:";
  constexpr std::string_view cyc = "suspension:cycle:";
  try {
    if (s.starts_with(kb)) {
      const std::string rest = s.substr(kb.size());
      const auto comma = rest.find(',');
      if (comma == std::string::npos) return std::nullopt;
      return Classified{PatternFamily::k1ab, 0, std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1))};
    }
    if (s.starts_with(cyc)) {
      const int len = std::stoi(s.substr(cyc.size()));
      if (len >= 4 && len % 2 == 0) return Classified{PatternFamily::suspended_even_cycle, len / 2, 0, 0};
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  check_order(g.order());
  return Canonizer(g).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> enumerate_graphs(int n, int threads) {
  return enumerate_free_graphs(n, {}, threads);
}

std::vector<Graph> enumerate_free_graphs(int n, std::span<const Pattern> forbidden, int threads) {
  check_order(n);
  std::vector<Graph> out;
  for (std::uint64_t code : levels_up_to(n, freeness_filter(forbidden), threads)) {
    out.push_back(graph_from_code(n, code));
  }
  return out;
}

std::string to_string(SearchMethod m) { return m == SearchMethod::exhaustive ? "exhaustive" : "local-search"; }

ExtremalRecord exact_extremal(int n, std::span<const Pattern> forbidden, const ExactOptions& options) {
  check_order(n);
  ExtremalRecord record;
  record.n = n;
  record.forbidden = sorted_names(forbidden);
  record.method = SearchMethod::exhaustive;
  const Keep keep = freeness_filter(forbidden);
  const auto path_k = suspended_path(record.forbidden);

  const auto inspect = [&](const Graph& g, std::int64_t t) {
    if (!options.check_identities) return;
    std::int64_t link_edges = 0;
    for (int v = 0; v < g.order(); ++v) link_edges += induced_edge_count(g, g.neighbors(v));
    if (3 * t != link_edges || t != triangle_count(g)) {
      throw std::logic_error("triangle/link identity fails on a scanned graph");
    }
    if (path_k && 3 * t > static_cast<std::int64_t>(*path_k - 1) * g.edge_count()) {
      throw std::logic_error("t <= (k-1)/3 e fails on a scanned graph");
    }
  };

  if (n == 1) {
    record.witness = Graph(1);
    record.graphs_scanned = 1;
    return record;
  }

  const std::vector<std::uint64_t> parents = levels_up_to(n - 1, keep, options.threads);
  const int workers = std::max(1, options.threads);
  struct Best {
    std::int64_t triangles = -1;
    std::uint64_t code = 0;
    std::uint64_t scanned = 0;
  };
  std::vector<Best> best(static_cast<std::size_t>(workers));
  std::atomic<std::int64_t> incumbent{-1};

  parallel_for(parents.size(), workers, [&](std::size_t i, int w) {
    const Graph p = graph_from_code(n - 1, parents[i]);
    const std::int64_t tp = triangle_count(p);
    // A new vertex adds e(G[S]) <= e(P) triangles.
    if (options.prune && tp + p.edge_count() < incumbent.load()) return;
    Best& mine = best[static_cast<std::size_t>(w)];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const VertexSet s = mask_set(mask);
      const Graph child = p.with_vertex(s);
      if (keep && !keep(child)) continue;
      ++mine.scanned;
      const std::int64_t t = tp + induced_edge_count(p, s);
      inspect(child, t);
      if (t < mine.triangles) continue;
      const std::uint64_t code = canonical_form(child).code;
      if (t > mine.triangles || code < mine.code) {
        mine.triangles = t;
        mine.code = code;
      }
      std::int64_t seen = incumbent.load();
      while (t > seen && !incumbent.compare_exchange_weak(seen, t)) {
      }
    }
  });

  Best overall;
  for (const Best& b : best) {
    overall.scanned += b.scanned;
    if (b.triangles > overall.triangles || (b.triangles == overall.triangles && b.code < overall.code)) {
      overall.triangles = b.triangles;
      overall.code = b.code;
    }
  }
  record.max_triangles = overall.triangles;
  record.witness = graph_from_code(n, overall.code);
  record.graphs_scanned = overall.scanned;
  return record;
}

ExtremalRecord local_search_lower_bound(int n, std::span<const Pattern> forbidden, std::uint64_t budget,
                                        std::uint64_t seed, const std::optional<Graph>& start) {
  const Graph origin = start ? *start : Graph(n);
  if (origin.order() != n) throw std::invalid_argument("start graph has the wrong order");
  if (!is_free(origin, forbidden)) throw std::invalid_argument("start graph contains a forbidden pattern");

  ExtremalRecord record;
  record.n = n;
  record.forbidden = sorted_names(forbidden);
  record.method = SearchMethod::local_search;
  record.seed = seed;
  record.budget = budget;

  std::mt19937_64 rng(seed);
  std::uint64_t tests = 0;
  const auto addable = [&](const Graph& g, int u, int v) {
    ++tests;
    const Graph h = g.with_edge(u, v);
    for (const Pattern& p : forbidden) {
      if (contains_subgraph_through_pair(h, p, u, v)) return false;
    }
    return true;
  };

  Graph g = origin;
  Graph best = g;
  std::int64_t best_t = triangle_count(g);
  constexpr int kRestartPeriod = 16;
  int stale = 0;
  std::uint64_t rounds = 0;

  while (tests < budget && rounds < budget && n >= 2) {
    ++rounds;
    // Climb: best-gain addition that keeps g free.
    while (tests < budget) {
      struct Move {
        int gain, u, v;
      };
      std::vector<Move> moves;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          const int gain = codegree(g, u, v);
          if (gain > 0) moves.push_back({gain, u, v});
        }
      }
      std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
        return a.gain != b.gain ? a.gain > b.gain : (a.u != b.u ? a.u < b.u : a.v < b.v);
      });
      bool moved = false;
      for (const Move& m : moves) {
        if (tests >= budget) break;
        if (addable(g, m.u, m.v)) {
          g = g.with_edge(m.u, m.v);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    const std::int64_t t = triangle_count(g);
    if (t > best_t) {
      best_t = t;
      best = g;
      stale = 0;
    } else if (++stale % kRestartPeriod == 0) {
      g = origin;
    }
    // Perturb: drop a few edges, then try a couple of random additions.
    auto edges = g.edges();
    const int drops = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < drops && !edges.empty(); ++i) {
      const std::size_t at = rng() % edges.size();
      g = g.without_edge(edges[at].u, edges[at].v);
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(at));
    }
    for (int i = 0; i < 2 && tests < budget; ++i) {
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      if (u == v || g.adjacent(u, v)) continue;
      if (addable(g, u, v)) g = g.with_edge(u, v);
    }
  }
  record.max_triangles = best_t;
  record.witness = best;
  record.graphs_scanned = tests;
  return record;
}

std::optional<std::int64_t> construction_baseline(int n, std::span<const std::string> forbidden) {
  const auto c = classify(forbidden);
  if (!c || n <= 0) return std::nullopt;
  const std::int64_t nn = n;
  if (c->family == PatternFamily::suspended_path) {
    const int m = (c->k - 1) / 2;
    if (n % (4 * m) != 0) return std::nullopt;
    return m * nn * nn / 8;
  }
  if (c->family == PatternFamily::k1ab && c->a < 2) return std::nullopt;
  if (n % 4 != 0) return std::nullopt;
  return nn * nn / 4;
}

std::vector<BoundCheck> verify_bounds(const ExtremalRecord& record) {
  const auto c = classify(record.forbidden);
  if (!c) {
    std::string names;
    for (const auto& s : record.forbidden) names += (names.empty() ? "" : ",") + s;
    throw UnsupportedBound("no closed-form bounds for forbidden set {" + names + "}");
  }
  constexpr double kEps = 1e-9;
  const double n = record.n;
  const double v = static_cast<double>(record.max_triangles);
  std::vector<BoundCheck> out;
  const auto upper = [&](std::string name, double bound, bool strict) {
    out.push_back({std::move(name), true, bound, strict ? v < bound - kEps : v <= bound + kEps, bound - v});
  };
  if (c->family == PatternFamily::suspended_path && record.n >= c->k) {
    const double k1 = c->k - 1;
    upper("pkhat_upper", k1 / 12 * n * n + k1 * k1 / 12 * n, false);
    if (c->k == 3) upper("p3hat_linear_error", n * n / 8 + 3 * n, true);
    if (c->k == 5) upper("p5hat_linear_error", n * n / 4 + 5 * n, false);
  }
  if (auto base = construction_baseline(record.n, record.forbidden)) {
    const double b = static_cast<double>(*base);
    out.push_back({c->family == PatternFamily::suspended_path ? "fnk_construction" : "hn_construction", false, b,
                   v + kEps >= b, v - b});
  }
  return out;
}

bool bounds_consistent(const ExtremalRecord& record, std::span<const BoundCheck> checks) {
  for (const BoundCheck& c : checks) {
    if (c.holds) continue;
    if (c.upper || record.method == SearchMethod::exhaustive) return false;
  }
  return true;
}

}  // namespace turan
