#include "turan/graph_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turan {

template <std::size_t W>
std::int64_t triangle_count(const BasicGraph<W>& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      // count w > v adjacent to both
      for (int w : g.neighbors(u) & g.neighbors(v)) {
        if (w > v) ++total;
      }
    }
  }
  return total;
}

template <std::size_t W>
std::vector<Triangle> list_triangles(const BasicGraph<W>& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(u) & g.neighbors(v)) {
        if (w > v) out.push_back(Triangle{u, v, w});
      }
    }
  }
  return out;
}

template <std::size_t W>
int codegree(const BasicGraph<W>& g, int u, int v) {
  if (u == v) throw std::invalid_argument("codegree of a vertex with itself");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw std::invalid_argument("codegree: vertex out of range");
  }
  return (g.neighbors(u) & g.neighbors(v)).size();
}

template <std::size_t W>
BasicVertexSet<W> common_neighborhood(const BasicGraph<W>& g, const BasicVertexSet<W>& s) {
  if (s.empty()) throw std::invalid_argument("common neighborhood of the empty set");
  if (!s.is_subset_of(g.vertices())) {
    throw std::invalid_argument("common neighborhood: set outside vertex range");
  }
  BasicVertexSet<W> out = g.vertices();
  for (int v : s) out &= g.neighbors(v);
  return out;
}

template <std::size_t W>
int induced_edge_count(const BasicGraph<W>& g, const BasicVertexSet<W>& x) {
  int twice = 0;
  for (int v : x) twice += (g.neighbors(v) & x).size();
  return twice / 2;
}

namespace {

template <std::size_t W>
std::uint64_t extend_paths(const BasicGraph<W>& g, int end, BasicVertexSet<W>& used, int remaining) {
  if (remaining == 0) return 1;
  const auto next = g.neighbors(end) - used;
  if (remaining == 1) return static_cast<std::uint64_t>(next.size());
  std::uint64_t total = 0;
  for (int w : next) {
    used.insert(w);
    total += extend_paths(g, w, used, remaining - 1);
    used.erase(w);
  }
  return total;
}

}  // namespace

template <std::size_t W>
std::uint64_t path_count(const BasicGraph<W>& g, int k) {
  if (k < 1) throw std::invalid_argument("path length must be at least 1");
  std::uint64_t total = 0;
  BasicVertexSet<W> used;
  for (int v = 0; v < g.order(); ++v) {
    used.insert(v);
    total += extend_paths(g, v, used, k);
    used.erase(v);
  }
  return total;
}

template <std::size_t W>
BasicGraph<W> delete_edges(const BasicGraph<W>& g, std::span<const Edge> edges) {
  BasicGraph<W> out = g;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !out.adjacent(e.u, e.v)) {
      // A repeated pair is also rejected here: it is no longer an edge.
      throw std::invalid_argument("delete_edges: {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} is not an edge");
    }
    out = out.without_edge(e.u, e.v);
  }
  return out;
}

template <std::size_t W>
BasicGraph<W> induced_subgraph(const BasicGraph<W>& g, const BasicVertexSet<W>& s) {
  const std::vector<int> members = s.members();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int w : g.neighbors(members[i]) & s) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return BasicGraph<W>(static_cast<int>(members.size()), edges);
}

#define TURAN_INSTANTIATE(W)                                                                     \
  template std::int64_t triangle_count(const BasicGraph<W>&);                                    \
  template std::vector<Triangle> list_triangles(const BasicGraph<W>&);                           \
  template int codegree(const BasicGraph<W>&, int, int);                                         \
  template BasicVertexSet<W> common_neighborhood(const BasicGraph<W>&, const BasicVertexSet<W>&); \
  template int induced_edge_count(const BasicGraph<W>&, const BasicVertexSet<W>&);               \
  template std::uint64_t path_count(const BasicGraph<W>&, int);                                  \
  template BasicGraph<W> delete_edges(const BasicGraph<W>&, std::span<const Edge>);              \
  template BasicGraph<W> induced_subgraph(const BasicGraph<W>&, const BasicVertexSet<W>&);

TURAN_INSTANTIATE(1)
TURAN_INSTANTIATE(4)

#undef TURAN_INSTANTIATE

}  // namespace turan
