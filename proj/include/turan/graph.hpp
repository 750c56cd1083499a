#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/vertex_set.hpp"

namespace turan {

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Three vertices a < b < c spanning a triangle of the host graph.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;

  [[nodiscard]] std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
};

/// Dense undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Values are immutable once built: every "mutator" returns a fresh graph.
/// `Words` fixes the vertex capacity at 64*Words; the hot paths use the single
/// word instantiation `Graph`, constructions at larger n use `WideGraph`.
template <std::size_t Words>
class BasicGraph {
 public:
  using Set = BasicVertexSet<Words>;
  static constexpr int kMaxVertices = Set::kCapacity;

  BasicGraph() = default;

  /// Edgeless graph on n vertices.
  explicit BasicGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    }
  }

  BasicGraph(int n, std::span<const Edge> edges) : BasicGraph(n) {
    for (const Edge& e : edges) {
      check_pair(e.u, e.v);
      if (!rows_[e.u].contains(e.v)) {
        rows_[e.u].insert(e.v);
        rows_[e.v].insert(e.u);
        ++edge_count_;
      }
    }
  }
  BasicGraph(int n, std::initializer_list<Edge> edges)
      : BasicGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int edge_count() const { return edge_count_; }
  [[nodiscard]] Set vertices() const { return Set::prefix(n_); }
  [[nodiscard]] const Set& neighbors(int v) const { return rows_[v]; }
  [[nodiscard]] int degree(int v) const { return rows_[v].size(); }
  [[nodiscard]] bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  [[nodiscard]] int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Edges in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u) {
      for (int v : rows_[u]) {
        if (v > u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  [[nodiscard]] BasicGraph with_edge(int u, int v) const {
    check_pair(u, v);
    BasicGraph g = *this;
    if (!g.rows_[u].contains(v)) {
      g.rows_[u].insert(v);
      g.rows_[v].insert(u);
      ++g.edge_count_;
    }
    return g;
  }

  [[nodiscard]] BasicGraph without_edge(int u, int v) const {
    check_pair(u, v);
    BasicGraph g = *this;
    if (g.rows_[u].contains(v)) {
      g.rows_[u].erase(v);
      g.rows_[v].erase(u);
      --g.edge_count_;
    }
    return g;
  }

  /// Appends vertex n adjacent to `neighbors` (which must lie in 0..n-1).
  [[nodiscard]] BasicGraph with_vertex(const Set& neighbors) const {
    if (n_ + 1 > kMaxVertices) throw std::invalid_argument("vertex capacity exceeded");
    if (!neighbors.is_subset_of(vertices())) {
      throw std::invalid_argument("new vertex neighbors outside vertex range");
    }
    BasicGraph g = *this;
    const int x = g.n_++;
    g.rows_[x] = neighbors;
    for (int v : neighbors) g.rows_[v].insert(x);
    g.edge_count_ += neighbors.size();
    return g;
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
      if (!(a.rows_[v] == b.rows_[v])) return false;
    }
    return true;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("vertex out of range: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} with n=" + std::to_string(n_));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  int edge_count_ = 0;
  std::array<Set, kMaxVertices> rows_{};
};

using Graph = BasicGraph<1>;
using WideGraph = BasicGraph<4>;

/// Copies a graph into another capacity class; throws if it does not fit.
template <std::size_t To, std::size_t From>
BasicGraph<To> convert_graph(const BasicGraph<From>& g) {
  const auto edges = g.edges();
  return BasicGraph<To>(g.order(), edges);
}

}  // namespace turan
