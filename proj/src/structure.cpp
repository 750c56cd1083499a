#include "turan/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "turan/graph_ops.hpp"

namespace turan {

namespace {

// Dense edge ids over the upper triangle; -1 for non-edges.
template <std::size_t W>
class EdgeIndex {
 public:
  explicit EdgeIndex(const BasicGraph<W>& g) : n_(g.order()), id_(static_cast<std::size_t>(n_ * n_), -1) {
    for (const Edge& e : g.edges()) {
      id_[static_cast<std::size_t>(e.u * n_ + e.v)] = static_cast<int>(edges_.size());
      edges_.push_back(e);
    }
  }
  [[nodiscard]] int id(int u, int v) const {
    if (u > v) std::swap(u, v);
    return id_[static_cast<std::size_t>(u * n_ + v)];
  }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<int> id_;
  std::vector<Edge> edges_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

std::uint64_t binomial(std::uint64_t n, int k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

template <std::size_t W>
BlockDecomposition triangle_blocks(const BasicGraph<W>& g) {
  const EdgeIndex<W> index(g);
  const auto& edges = index.edges();
  UnionFind uf(edges.size());
  std::vector<char> covered(edges.size(), 0);
  for (const Triangle& t : list_triangles(g)) {
    const int ab = index.id(t.a, t.b);
    const int ac = index.id(t.a, t.c);
    const int bc = index.id(t.b, t.c);
    uf.unite(ab, ac);
    uf.unite(ab, bc);
    covered[static_cast<std::size_t>(ab)] = covered[static_cast<std::size_t>(ac)] =
        covered[static_cast<std::size_t>(bc)] = 1;
  }
  // Roots are the smallest edge id of their class, and edge ids follow
  // lexicographic order, so scanning ids in order yields sorted blocks.
  BlockDecomposition out;
  std::vector<int> slot(edges.size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!covered[i]) {
      out.uncovered.push_back(edges[i]);
      continue;
    }
    const auto root = static_cast<std::size_t>(uf.find(static_cast<int>(i)));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[static_cast<std::size_t>(slot[root])].push_back(edges[i]);
  }
  return out;
}

template <std::size_t W>
std::optional<int> is_book(std::span<const Edge> block, const BasicGraph<W>& host) {
  BasicVertexSet<W> vertices;
  std::vector<int> degree(static_cast<std::size_t>(host.order()), 0);
  for (const Edge& e : block) {
    if (e.v >= host.order() || !host.adjacent(e.u, e.v)) {
      throw std::invalid_argument("is_book: block edge is not an edge of the host");
    }
    vertices.insert(e.u);
    vertices.insert(e.v);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  const int s = vertices.size() - 2;
  if (s < 1 || static_cast<int>(block.size()) != 2 * s + 1) return std::nullopt;
  // With 2s+1 edges, a spine uv touching every other vertex leaves exactly the
  // 2s page edges and nothing else.
  for (const Edge& e : block) {
    if (degree[static_cast<std::size_t>(e.u)] == s + 1 && degree[static_cast<std::size_t>(e.v)] == s + 1) {
      int pages = 0;
      for (const Edge& f : block) {
        if (f == e) continue;
        const bool touches_u = f.u == e.u || f.v == e.u;
        const bool touches_v = f.u == e.v || f.v == e.v;
        if (touches_u == touches_v) return std::nullopt;
        ++pages;
      }
      if (pages == 2 * s) return s;
    }
  }
  return std::nullopt;
}

template <std::size_t W>
EdgeClassification classify_edges(const BasicGraph<W>& g, LightMode mode) {
  EdgeClassification out;
  out.mode = mode;
  for (const Edge& e : g.edges()) {
    const int c = codegree(g, e.u, e.v);
    if (c == 0) continue;
    const bool light = mode == LightMode::unique_triangle ? c == 1 : c == 2;
    (light ? out.light : out.heavy).push_back(e);
  }
  return out;
}

template <std::size_t W>
BasicBfsLevels<W> bfs_levels(const BasicGraph<W>& g, int root) {
  if (root < 0 || root >= g.order()) throw std::invalid_argument("bfs root out of range");
  BasicBfsLevels<W> out;
  out.root = root;
  BasicVertexSet<W> seen{root};
  BasicVertexSet<W> frontier{root};
  while (!frontier.empty()) {
    out.levels.push_back(frontier);
    BasicVertexSet<W> next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  for (std::size_t i = 0; i < out.levels.size(); ++i) {
    out.within.push_back(induced_edge_count(g, out.levels[i]));
    if (i + 1 < out.levels.size()) {
      int cross = 0;
      for (int v : out.levels[i]) cross += (g.neighbors(v) & out.levels[i + 1]).size();
      out.between.push_back(cross);
    }
  }
  return out;
}

template <std::size_t W>
std::vector<LevelViolation> check_level_inequalities(const BasicBfsLevels<W>& levels, int k) {
  if (k < 2) throw std::invalid_argument("level inequalities need k >= 2");
  auto size = [&](int i) -> std::int64_t {
    return i < static_cast<int>(levels.levels.size()) ? levels.levels[static_cast<std::size_t>(i)].size() : 0;
  };
  std::vector<LevelViolation> out;
  for (int i = 1; i < k; ++i) {
    const std::int64_t within = i < static_cast<int>(levels.within.size()) ? levels.within[static_cast<std::size_t>(i)] : 0;
    const std::int64_t between = i < static_cast<int>(levels.between.size()) ? levels.between[static_cast<std::size_t>(i)] : 0;
    const std::int64_t within_bound = (k - 1) * size(i);
    const std::int64_t between_bound = (k - 1) * (size(i) + size(i + 1));
    if (within > within_bound) out.push_back({i, false, within, within_bound});
    if (between > between_bound) out.push_back({i, true, between, between_bound});
  }
  return out;
}

template <std::size_t W>
HyperedgeCount shared_edge_hyperedge_count(const BasicGraph<W>& g, int a) {
  if (a < 1) throw std::invalid_argument("hyperedge uniformity must be at least 1");
  HyperedgeCount out;
  for (const Edge& e : g.edges()) {
    out.by_edges += binomial(static_cast<std::uint64_t>(codegree(g, e.u, e.v)), a);
  }
  const int n = g.order();
  if (a > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(a));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    BasicVertexSet<W> s;
    for (int v : pick) s.insert(v);
    out.by_subsets += static_cast<std::uint64_t>(induced_edge_count(g, common_neighborhood(g, s)));
    int i = a - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - a + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < a; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

// Triangles grouped by the edges they use.
struct TriangleIncidence {
  std::vector<Triangle> triangles;
  std::vector<std::array<int, 3>> edges_of;   // edge ids of each triangle
  std::vector<std::vector<int>> through;      // triangle ids through each edge
};

template <std::size_t W>
TriangleIncidence incidence(const BasicGraph<W>& g) {
  const EdgeIndex<W> index(g);
  TriangleIncidence out;
  out.triangles = list_triangles(g);
  out.through.resize(index.edges().size());
  for (std::size_t t = 0; t < out.triangles.size(); ++t) {
    const Triangle& tr = out.triangles[t];
    const std::array<int, 3> ids{index.id(tr.a, tr.b), index.id(tr.a, tr.c), index.id(tr.b, tr.c)};
    out.edges_of.push_back(ids);
    for (int e : ids) out.through[static_cast<std::size_t>(e)].push_back(static_cast<int>(t));
  }
  return out;
}

// Branch and bound for the largest set of triangles using each edge at most
// once. Branches on the edge with the fewest live triangles: one child per
// live triangle through it plus one child leaving the edge unused.
class PackingSolver {
 public:
  explicit PackingSolver(const TriangleIncidence& inc)
      : inc_(inc), alive_(inc.triangles.size(), 1), live_through_(inc.through.size(), 0) {
    for (std::size_t e = 0; e < inc.through.size(); ++e) {
      live_through_[e] = static_cast<int>(inc.through[e].size());
      if (live_through_[e] > 0) ++live_edges_;
    }
    alive_count_ = static_cast<int>(inc.triangles.size());
  }

  std::vector<int> solve() {
    search();
    return best_;
  }

 private:
  void kill(int t, std::vector<int>& log) {
    if (!alive_[static_cast<std::size_t>(t)]) return;
    alive_[static_cast<std::size_t>(t)] = 0;
    --alive_count_;
    for (int e : inc_.edges_of[static_cast<std::size_t>(t)]) {
      if (--live_through_[static_cast<std::size_t>(e)] == 0) --live_edges_;
    }
    log.push_back(t);
  }

  void revive(const std::vector<int>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      const int t = *it;
      alive_[static_cast<std::size_t>(t)] = 1;
      ++alive_count_;
      for (int e : inc_.edges_of[static_cast<std::size_t>(t)]) {
        if (live_through_[static_cast<std::size_t>(e)]++ == 0) ++live_edges_;
      }
    }
  }

  void search() {
    const int current = static_cast<int>(chosen_.size());
    if (current > static_cast<int>(best_.size())) best_ = chosen_;
    const int bound = std::min(alive_count_, live_edges_ / 3);
    if (current + bound <= static_cast<int>(best_.size())) return;

    int pivot = -1;
    for (std::size_t e = 0; e < live_through_.size(); ++e) {
      const int c = live_through_[e];
      if (c > 0 && (pivot < 0 || c < live_through_[static_cast<std::size_t>(pivot)])) pivot = static_cast<int>(e);
    }
    if (pivot < 0) return;

    std::vector<int> options;
    for (int t : inc_.through[static_cast<std::size_t>(pivot)]) {
      if (alive_[static_cast<std::size_t>(t)]) options.push_back(t);
    }
    for (int t : options) {
      std::vector<int> log;
      for (int e : inc_.edges_of[static_cast<std::size_t>(t)]) {
        for (int u : inc_.through[static_cast<std::size_t>(e)]) kill(u, log);
      }
      chosen_.push_back(t);
      search();
      chosen_.pop_back();
      revive(log);
    }
    std::vector<int> log;
    for (int t : options) kill(t, log);
    search();
    revive(log);
  }

  const TriangleIncidence& inc_;
  std::vector<char> alive_;
  std::vector<int> live_through_;
  int alive_count_ = 0;
  int live_edges_ = 0;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

}  // namespace

template <std::size_t W>
TriangleShareGraph triangle_share_graph(const BasicGraph<W>& g) {
  const TriangleIncidence inc = incidence(g);
  TriangleShareGraph out;
  out.triangles = inc.triangles;
  out.adjacency.resize(inc.triangles.size());
  for (const auto& group : inc.through) {
    for (int s : group)
      for (int t : group)
        if (s != t) out.adjacency[static_cast<std::size_t>(s)].push_back(t);
  }
  // Two distinct triangles share at most one edge, so there are no duplicates.
  for (auto& row : out.adjacency) std::sort(row.begin(), row.end());
  return out;
}

template <std::size_t W>
Packing max_edge_disjoint_triangles(const BasicGraph<W>& g, const PackingOptions& options) {
  const TriangleIncidence inc = incidence(g);
  Packing out;
  if (!options.force_greedy && inc.triangles.size() <= options.exact_limit) {
    PackingSolver solver(inc);
    std::vector<int> chosen = solver.solve();
    std::sort(chosen.begin(), chosen.end());
    for (int t : chosen) out.triangles.push_back(inc.triangles[static_cast<std::size_t>(t)]);
    out.exact = true;
    return out;
  }
  // Greedy: repeatedly take the live triangle with the fewest live neighbors
  // in the share graph (ties to the lexicographically smallest).
  std::vector<char> alive(inc.triangles.size(), 1);
  std::vector<int> live_through(inc.through.size());
  for (std::size_t e = 0; e < inc.through.size(); ++e) live_through[e] = static_cast<int>(inc.through[e].size());
  while (true) {
    int pick = -1;
    int pick_degree = 0;
    for (std::size_t t = 0; t < inc.triangles.size(); ++t) {
      if (!alive[t]) continue;
      int degree = 0;
      for (int e : inc.edges_of[t]) degree += live_through[static_cast<std::size_t>(e)] - 1;
      if (pick < 0 || degree < pick_degree) {
        pick = static_cast<int>(t);
        pick_degree = degree;
      }
    }
    if (pick < 0) break;
    out.triangles.push_back(inc.triangles[static_cast<std::size_t>(pick)]);
    for (int e : inc.edges_of[static_cast<std::size_t>(pick)]) {
      for (int t : inc.through[static_cast<std::size_t>(e)]) {
        if (!alive[static_cast<std::size_t>(t)]) continue;
        alive[static_cast<std::size_t>(t)] = 0;
        for (int f : inc.edges_of[static_cast<std::size_t>(t)]) --live_through[static_cast<std::size_t>(f)];
      }
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

double spencer_lower_bound(double n, int r, double d) {
  if (r < 2) throw std::invalid_argument("spencer bound needs uniformity r >= 2");
  if (n < 0 || d < 0) throw std::invalid_argument("spencer bound needs n >= 0 and d >= 0");
  if (d == 0) return n;
  // Below average degree 1 the raw formula can exceed alpha (a single edge
  // plus an isolated vertex gives 2.25 > 2); n - e(H) >= (1 - 1/r) n covers it.
  const double effective = std::max(d, 1.0);
  return (static_cast<double>(r - 1) / r) * n / std::pow(effective, 1.0 / (r - 1));
}

namespace {

template <std::size_t W>
class CycleFinder {
 public:
  CycleFinder(const BasicGraph<W>& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {}

  CycleSearch run() {
    CycleSearch out;
    for (int s = 0; s < g_.order() && !found_ && !exhausted_; ++s) {
      start_ = s;
      allowed_ = g_.vertices() - BasicVertexSet<W>::prefix(s + 1);
      path_.assign(1, s);
      used_ = BasicVertexSet<W>{s};
      extend();
    }
    out.witness = witness_;
    out.exhausted = exhausted_ && !found_;
    return out;
  }

 private:
  void extend() {
    if (found_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int end = path_.back();
    if (static_cast<int>(path_.size()) >= k_ + 1 && g_.adjacent(end, start_) && try_close()) return;
    for (int w : g_.neighbors(end) & allowed_) {
      if (used_.contains(w)) continue;
      path_.push_back(w);
      used_.insert(w);
      extend();
      used_.erase(w);
      path_.pop_back();
      if (found_ || exhausted_) return;
    }
  }

  bool try_close() {
    const int len = static_cast<int>(path_.size());
    for (int i = 0; i < len; ++i) {
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g_.adjacent(path_[static_cast<std::size_t>(i)], path_[static_cast<std::size_t>(j)])) {
          witness_ = ChordedCycle{path_, Edge(path_[static_cast<std::size_t>(i)], path_[static_cast<std::size_t>(j)])};
          found_ = true;
          return true;
        }
      }
    }
    return false;
  }

  const BasicGraph<W>& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int start_ = 0;
  BasicVertexSet<W> allowed_;
  BasicVertexSet<W> used_;
  std::vector<int> path_;
  std::optional<ChordedCycle> witness_;
  bool found_ = false;
  bool exhausted_ = false;
};

}  // namespace

template <std::size_t W>
CycleSearch find_long_cycle_with_chord(const BasicGraph<W>& g, int k, std::uint64_t node_budget) {
  if (k < 3) throw std::invalid_argument("cycle-with-chord search needs k >= 3");
  return CycleFinder<W>(g, k, node_budget).run();
}

template <std::size_t W>
bool valid_chorded_cycle(const BasicGraph<W>& g, const ChordedCycle& w, int k) {
  const int len = static_cast<int>(w.cycle.size());
  if (len < k + 1 || len < 4) return false;
  BasicVertexSet<W> seen;
  for (int v : w.cycle) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < len; ++i) {
    if (!g.adjacent(w.cycle[static_cast<std::size_t>(i)], w.cycle[static_cast<std::size_t>((i + 1) % len)])) return false;
  }
  const auto pos = [&](int v) {
    return static_cast<int>(std::find(w.cycle.begin(), w.cycle.end(), v) - w.cycle.begin());
  };
  const int i = pos(w.chord.u);
  const int j = pos(w.chord.v);
  if (i == len || j == len) return false;
  const int gap = std::abs(i - j);
  if (gap == 1 || gap == len - 1) return false;
  return g.adjacent(w.chord.u, w.chord.v);
}

#define TURAN_INSTANTIATE(W)                                                                              \
  template BlockDecomposition triangle_blocks(const BasicGraph<W>&);                                      \
  template std::optional<int> is_book(std::span<const Edge>, const BasicGraph<W>&);                       \
  template EdgeClassification classify_edges(const BasicGraph<W>&, LightMode);                            \
  template BasicBfsLevels<W> bfs_levels(const BasicGraph<W>&, int);                                       \
  template std::vector<LevelViolation> check_level_inequalities(const BasicBfsLevels<W>&, int);           \
  template HyperedgeCount shared_edge_hyperedge_count(const BasicGraph<W>&, int);                         \
  template TriangleShareGraph triangle_share_graph(const BasicGraph<W>&);                                 \
  template Packing max_edge_disjoint_triangles(const BasicGraph<W>&, const PackingOptions&);              \
  template CycleSearch find_long_cycle_with_chord(const BasicGraph<W>&, int, std::uint64_t);              \
  template bool valid_chorded_cycle(const BasicGraph<W>&, const ChordedCycle&, int);

TURAN_INSTANTIATE(1)
TURAN_INSTANTIATE(4)

#undef TURAN_INSTANTIATE

}  // namespace turan
