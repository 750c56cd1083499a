#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Number of triangles t(G).
template <std::size_t W>
std::int64_t triangle_count(const BasicGraph<W>& g);

/// Every triangle exactly once, in lexicographic order.
template <std::size_t W>
std::vector<Triangle> list_triangles(const BasicGraph<W>& g);

/// |N(u) ∩ N(v)|; u and v need not be adjacent. Throws on u == v.
template <std::size_t W>
int codegree(const BasicGraph<W>& g, int u, int v);

/// Intersection of the neighborhoods of every member of `s`. Throws on empty `s`.
template <std::size_t W>
BasicVertexSet<W> common_neighborhood(const BasicGraph<W>& g, const BasicVertexSet<W>& s);

/// e(X): edges with both endpoints in `x`.
template <std::size_t W>
int induced_edge_count(const BasicGraph<W>& g, const BasicVertexSet<W>& x);

/// p_k(G): ordered sequences of k+1 distinct vertices with consecutive
/// vertices adjacent, so every undirected k-edge path is counted twice.
template <std::size_t W>
std::uint64_t path_count(const BasicGraph<W>& g, int k);

/// Returns g minus the listed edges. Every listed pair must be an edge.
template <std::size_t W>
BasicGraph<W> delete_edges(const BasicGraph<W>& g, std::span<const Edge> edges);

/// G[S] relabelled so that the i-th smallest member of `s` becomes vertex i.
template <std::size_t W>
BasicGraph<W> induced_subgraph(const BasicGraph<W>& g, const BasicVertexSet<W>& s);

}  // namespace turan
