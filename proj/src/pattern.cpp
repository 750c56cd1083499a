#include "turan/pattern.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace turan {

namespace {

constexpr int kMaxPatternOrder = 16;

int parse_parameter(std::string_view text, std::string_view full) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("pattern '" + std::string(full) + "': bad parameter '" +
                                std::string(text) + "'");
  }
  return value;
}

void require(bool ok, std::string_view full, const char* what) {
  if (!ok) throw std::invalid_argument("pattern '" + std::string(full) + "': " + what);
}

Graph complete_minus(int r, std::initializer_list<Edge> missing) {
  Graph g(r);
  for (int u = 0; u < r; ++u) {
    for (int v = u + 1; v < r; ++v) g = g.with_edge(u, v);
  }
  for (const Edge& e : missing) g = g.without_edge(e.u, e.v);
  return g;
}

Graph path_graph(int k) {
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) g = g.with_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g = g.with_edge(i, (i + 1) % k);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) g = g.with_edge(i, j);
  }
  return g;
}

Graph book_graph(int s) {
  Graph g(s + 2);
  g = g.with_edge(0, 1);
  for (int p = 2; p < s + 2; ++p) g = g.with_edge(0, p).with_edge(1, p);
  return g;
}

Graph apex_over(const Graph& inner) { return inner.with_vertex(inner.vertices()); }

Pattern plain(std::string_view name, Graph g) { return Pattern{std::string(name), g, nullptr}; }

Pattern suspension_named(std::string_view name, const Pattern& inner) {
  Pattern p = make_suspension(inner);
  p.name = std::string(name);
  return p;
}

std::optional<Pattern> fixed_pattern(std::string_view name) {
  if (name == "k3") return plain(name, complete_minus(3, {}));
  if (name == "k4") return plain(name, complete_minus(4, {}));
  if (name == "k5") return plain(name, complete_minus(5, {}));
  if (name == "k6") return plain(name, complete_minus(6, {}));
  if (name == "k5-minus") return plain(name, complete_minus(5, {{0, 1}}));
  if (name == "k6-minus") return plain(name, complete_minus(6, {{0, 1}}));
  // Two intersecting missing edges ab, bc.
  if (name == "k6-2-1") return plain(name, complete_minus(6, {{0, 1}, {1, 2}}));
  // Two disjoint missing edges ab, cd.
  if (name == "k6-2-2") return plain(name, complete_minus(6, {{0, 1}, {2, 3}}));
  // Missing path ab, bc, cd.
  if (name == "k6-3-1") return plain(name, complete_minus(6, {{0, 1}, {1, 2}, {2, 3}}));
  // Missing ab plus the disjoint path cd, de.
  if (name == "k6-3-2") return plain(name, complete_minus(6, {{0, 1}, {2, 3}, {3, 4}}));
  if (name == "k222") return plain(name, complete_minus(6, {{0, 1}, {2, 3}, {4, 5}}));
  if (name == "q32") {
    // P3 on 0-1-2-3, both apexes 4 and 5 joined to all of it; the outer
    // edges are the four joining an apex to a path endpoint.
    Graph g = path_graph(3);
    g = apex_over(g);
    g = g.with_vertex(VertexSet{0, 1, 2, 3});
    return plain(name, g);
  }
  if (name == "w4" || name == "k122") return suspension_named(name, plain("cycle:4", cycle_graph(4)));
  if (name == "w5") return suspension_named(name, plain("cycle:5", cycle_graph(5)));
  if (name == "w5plus") {
    // Rim a..e = 0..4, hub x = 5, chord ac.
    return plain(name, apex_over(cycle_graph(5)).with_edge(0, 2));
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> catalog_fixed_names() {
  return {"k3",     "k4",     "k5",     "k6",   "k5-minus", "k6-minus", "k6-2-1", "k6-2-2", "k6-3-1",
          "k6-3-2", "k222",   "q32",    "w4",   "k122",     "w5",       "w5plus"};
}

Pattern make_suspension(const Pattern& inner) {
  const Graph& h = inner.realization;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) {
      throw std::invalid_argument("suspension of '" + inner.name + "': vertex " + std::to_string(v) +
                                  " is isolated");
    }
  }
  if (h.order() + 1 > kMaxPatternOrder) {
    throw std::invalid_argument("suspension of '" + inner.name + "' exceeds the pattern size limit");
  }
  return Pattern{"suspension:" + inner.name, apex_over(h), std::make_shared<const Pattern>(inner)};
}

namespace {

std::invalid_argument unknown_pattern(std::string_view name) {
  std::string valid;
  for (const auto& n : catalog_fixed_names()) valid += n + ", ";
  return std::invalid_argument("unknown pattern '" + std::string(name) + "'; valid names: " + valid +
                               "path:k, cycle:k, complete:r, complete-bipartite:a,b, book:s, suspension:<name>");
}

}  // namespace

Pattern catalog_get(std::string_view name) {
  if (auto fixed = fixed_pattern(name)) return *fixed;

  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw unknown_pattern(name);
  }
  const std::string_view family = name.substr(0, colon);
  const std::string_view args = name.substr(colon + 1);

  if (family == "suspension") return make_suspension(catalog_get(args));

  auto sized = [&](Graph g) {
    require(g.order() <= kMaxPatternOrder, name, "exceeds the pattern size limit");
    return plain(name, g);
  };
  if (family == "path") {
    const int k = parse_parameter(args, name);
    require(k >= 1 && k < kMaxPatternOrder, name, "path length must be in 1..15");
    return sized(path_graph(k));
  }
  if (family == "cycle") {
    const int k = parse_parameter(args, name);
    require(k >= 3 && k <= kMaxPatternOrder, name, "cycle length must be in 3..16");
    return sized(cycle_graph(k));
  }
  if (family == "complete") {
    const int r = parse_parameter(args, name);
    require(r >= 2 && r <= kMaxPatternOrder, name, "clique order must be in 2..16");
    return sized(complete_minus(r, {}));
  }
  if (family == "complete-bipartite") {
    const auto comma = args.find(',');
    require(comma != std::string_view::npos, name, "expected two parameters a,b");
    const int a = parse_parameter(args.substr(0, comma), name);
    const int b = parse_parameter(args.substr(comma + 1), name);
    require(a >= 1 && a <= b, name, "parameters must satisfy 1 <= a <= b");
    require(a + b <= kMaxPatternOrder, name, "exceeds the pattern size limit");
    return sized(complete_bipartite(a, b));
  }
  if (family == "book") {
    const int s = parse_parameter(args, name);
    require(s >= 1 && s + 2 <= kMaxPatternOrder, name, "page count must be in 1..14");
    return sized(book_graph(s));
  }
  throw unknown_pattern(name);
}

std::vector<Pattern> parse_pattern_list(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view token = list.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const bool numeric = !token.empty() && token.find_first_not_of("0123456789") == std::string_view::npos;
    if (numeric && !names.empty()) {
      names.back() += "," + std::string(token);
    } else if (!token.empty()) {
      names.emplace_back(token);
    } else {
      throw std::invalid_argument("empty pattern name in list '" + std::string(list) + "'");
    }
    start = end + 1;
  }
  std::vector<Pattern> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(catalog_get(n));
  return out;
}

// ---------------------------------------------------------------------------
// Matcher

namespace {

struct Plan {
  int k = 0;
  int edges = 0;
  std::array<int, kMaxPatternOrder> vertex{};  // search position -> pattern vertex
  std::array<int, kMaxPatternOrder> degree{};  // by position
  std::array<std::array<int, kMaxPatternOrder>, kMaxPatternOrder> back{};  // earlier pattern neighbors
  std::array<int, kMaxPatternOrder> back_count{};
  int max_degree = 0;
};

Plan make_plan(const Graph& p, bool catalog_order) {
  if (p.order() > kMaxPatternOrder) throw std::invalid_argument("pattern exceeds the size limit");
  Plan plan;
  plan.k = p.order();
  plan.edges = p.edge_count();
  plan.max_degree = p.max_degree();
  VertexSet placed;
  for (int pos = 0; pos < plan.k; ++pos) {
    int pick = pos;
    if (!catalog_order) {
      // Most already-placed neighbors first, then highest degree, then lowest id.
      int best_links = -1;
      int best_degree = -1;
      for (int v = 0; v < plan.k; ++v) {
        if (placed.contains(v)) continue;
        const int links = (p.neighbors(v) & placed).size();
        if (links > best_links || (links == best_links && p.degree(v) > best_degree)) {
          best_links = links;
          best_degree = p.degree(v);
          pick = v;
        }
      }
    }
    plan.vertex[pos] = pick;
    plan.degree[pos] = p.degree(pick);
    int c = 0;
    for (int u : p.neighbors(pick) & placed) plan.back[pos][c++] = u;
    plan.back_count[pos] = c;
    placed.insert(pick);
  }
  return plan;
}

template <std::size_t W>
class Search {
 public:
  using Set = BasicVertexSet<W>;
  using Visitor = std::function<bool(std::span<const int>)>;

  Search(const BasicGraph<W>& g, const Plan& plan, const Set& domain, const Set& forced, bool twins)
      : g_(g), plan_(plan), domain_(domain), forced_(forced), twins_(twins) {
    int twice_edges = 0;
    for (int v : domain_) {
      const int d = (g_.neighbors(v) & domain_).size();
      twice_edges += d;
      for (int t = 0; t <= plan_.max_degree && t <= d; ++t) degree_mask_[t].insert(v);
    }
    feasible_ = domain_.size() >= plan_.k && twice_edges / 2 >= plan_.edges && forced_.is_subset_of(domain_) &&
                forced_.size() <= plan_.k;
    if (feasible_ && twins_) compute_twins();
  }

  bool exists() {
    if (!feasible_) return false;
    visitor_ = nullptr;
    return extend(0);
  }

  void enumerate(const Visitor& visit) {
    if (!feasible_) return;
    visitor_ = &visit;
    twins_ = false;
    extend(0);
  }

 private:
  void compute_twins() {
    for (int v : domain_) {
      twin_rep_[v] = v;
      const Set nv = g_.neighbors(v) & domain_;
      for (int u : domain_) {
        if (u >= v) break;
        if (twin_rep_[u] != u) continue;
        if (forced_.contains(u) != forced_.contains(v)) continue;
        Set nu = g_.neighbors(u) & domain_;
        Set nv_wo = nv;
        nu.erase(v);
        nv_wo.erase(u);
        if (nu == nv_wo) {
          twin_rep_[v] = u;
          break;
        }
      }
    }
  }

  // Returns true to stop the search.
  bool extend(int pos) {
    if (pos == plan_.k) {
      if (visitor_ == nullptr) return true;
      return !(*visitor_)(std::span<const int>(image_.data(), static_cast<std::size_t>(plan_.k)));
    }
    const int pv = plan_.vertex[pos];
    Set cand = degree_mask_[plan_.degree[pos]] - used_;
    for (int i = 0; i < plan_.back_count[pos]; ++i) cand &= g_.neighbors(image_[plan_.back[pos][i]]);
    const Set pending = forced_ - used_;
    const int need = pending.size();
    const int slots = plan_.k - pos;
    if (need > slots) return false;
    if (need == slots) cand &= pending;

    Set tried;
    for (int v : cand) {
      if (twins_) {
        const int rep = twin_rep_[v];
        if (tried.contains(rep)) continue;
        tried.insert(rep);
      }
      image_[pv] = v;
      used_.insert(v);
      const bool stop = extend(pos + 1);
      used_.erase(v);
      if (stop) return true;
    }
    return false;
  }

  const BasicGraph<W>& g_;
  const Plan& plan_;
  Set domain_;
  Set forced_;
  bool twins_;
  bool feasible_ = false;
  const Visitor* visitor_ = nullptr;
  std::array<Set, kMaxPatternOrder + 1> degree_mask_{};
  std::array<int, Set::kCapacity> twin_rep_{};
  std::array<int, kMaxPatternOrder> image_{};
  Set used_;
};

void require_suspendable(const Pattern& inner) {
  for (int v = 0; v < inner.order(); ++v) {
    if (inner.realization.degree(v) == 0) {
      throw std::invalid_argument("suspension inner '" + inner.name + "' has an isolated vertex");
    }
  }
}

template <std::size_t W>
bool search_exists(const BasicGraph<W>& g, const Plan& plan, const BasicVertexSet<W>& domain,
                   const BasicVertexSet<W>& forced) {
  return Search<W>(g, plan, domain, forced, true).exists();
}

}  // namespace

template <std::size_t W>
bool contains_subgraph_generic(const BasicGraph<W>& g, const Pattern& p) {
  const Plan plan = make_plan(p.realization, false);
  return search_exists(g, plan, g.vertices(), {});
}

template <std::size_t W>
bool contains_suspension(const BasicGraph<W>& g, const Pattern& inner) {
  require_suspendable(inner);
  const Plan plan = make_plan(inner.realization, false);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < plan.k) continue;
    if (search_exists(g, plan, g.neighbors(v), {})) return true;
  }
  return false;
}

template <std::size_t W>
bool contains_subgraph(const BasicGraph<W>& g, const Pattern& p) {
  if (p.inner) return contains_suspension(g, *p.inner);
  return contains_subgraph_generic(g, p);
}

template <std::size_t W>
bool contains_subgraph_through_vertex(const BasicGraph<W>& g, const Pattern& p, int x) {
  using Set = BasicVertexSet<W>;
  if (x < 0 || x >= g.order()) throw std::invalid_argument("vertex out of range");
  if (!p.inner) return search_exists(g, make_plan(p.realization, false), g.vertices(), Set{x});
  const Plan plan = make_plan(p.inner->realization, false);
  if (search_exists(g, plan, g.neighbors(x), {})) return true;
  for (int a : g.neighbors(x)) {
    if (g.degree(a) >= plan.k && search_exists(g, plan, g.neighbors(a), Set{x})) return true;
  }
  return false;
}

template <std::size_t W>
bool contains_subgraph_through_pair(const BasicGraph<W>& g, const Pattern& p, int u, int v) {
  using Set = BasicVertexSet<W>;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) {
    throw std::invalid_argument("vertex pair out of range");
  }
  if (!p.inner) return search_exists(g, make_plan(p.realization, false), g.vertices(), Set{u, v});
  const Plan plan = make_plan(p.inner->realization, false);
  if (g.adjacent(u, v)) {
    if (search_exists(g, plan, g.neighbors(u), Set{v})) return true;
    if (search_exists(g, plan, g.neighbors(v), Set{u})) return true;
  }
  for (int a : g.neighbors(u) & g.neighbors(v)) {
    if (g.degree(a) >= plan.k && search_exists(g, plan, g.neighbors(a), Set{u, v})) return true;
  }
  return false;
}

template <std::size_t W>
std::optional<Embedding> find_embedding(const BasicGraph<W>& g, const Pattern& p) {
  using Set = BasicVertexSet<W>;
  if (!contains_subgraph(g, p)) return std::nullopt;
  const Plan plan = make_plan(p.realization, false);
  const int n = g.order();

  // Grow the lexicographically smallest image set one member at a time.
  Set chosen;
  int last = -1;
  for (int pos = 0; pos < plan.k; ++pos) {
    bool placed = false;
    for (int v = last + 1; v < n && !placed; ++v) {
      Set domain = Set::prefix(n) - Set::prefix(v + 1);
      domain |= chosen;
      domain.insert(v);
      Set forced = chosen;
      forced.insert(v);
      if (search_exists(g, plan, domain, forced)) {
        chosen.insert(v);
        last = v;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("find_embedding: image set construction failed");
  }

  // Smallest map onto that set: catalog order, increasing candidates.
  const Plan ordered = make_plan(p.realization, true);
  Embedding best;
  Search<W>(g, ordered, chosen, chosen, false).enumerate([&](std::span<const int> image) {
    best.assign(image.begin(), image.end());
    return false;
  });
  return best;
}

template <std::size_t W>
bool is_free(const BasicGraph<W>& g, std::span<const Pattern> forbidden) {
  for (const Pattern& p : forbidden) {
    if (contains_subgraph(g, p)) return false;
  }
  return true;
}

template <std::size_t W>
std::optional<FoundPattern> find_forbidden(const BasicGraph<W>& g, std::span<const Pattern> forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (auto w = find_embedding(g, forbidden[i])) return FoundPattern{i, std::move(*w)};
  }
  return std::nullopt;
}

template <std::size_t W>
void for_each_embedding(const BasicGraph<W>& g, const Pattern& p,
                        const std::function<bool(std::span<const int>)>& visit) {
  const Plan plan = make_plan(p.realization, false);
  Search<W>(g, plan, g.vertices(), {}, false).enumerate(visit);
}

#define TURAN_INSTANTIATE(W)                                                                         \
  template bool contains_subgraph(const BasicGraph<W>&, const Pattern&);                             \
  template bool contains_subgraph_generic(const BasicGraph<W>&, const Pattern&);                     \
  template bool contains_suspension(const BasicGraph<W>&, const Pattern&);                           \
  template std::optional<Embedding> find_embedding(const BasicGraph<W>&, const Pattern&);            \
  template bool contains_subgraph_through_vertex(const BasicGraph<W>&, const Pattern&, int);         \
  template bool contains_subgraph_through_pair(const BasicGraph<W>&, const Pattern&, int, int);      \
  template bool is_free(const BasicGraph<W>&, std::span<const Pattern>);                             \
  template std::optional<FoundPattern> find_forbidden(const BasicGraph<W>&, std::span<const Pattern>); \
  template void for_each_embedding(const BasicGraph<W>&, const Pattern&,                            \
                                   const std::function<bool(std::span<const int>)>&);

TURAN_INSTANTIATE(1)
TURAN_INSTANTIATE(4)

#undef TURAN_INSTANTIATE

}  // namespace turan
