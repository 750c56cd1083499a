#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Triangle-connectivity classes of E(G). Each block lists its edges in
/// lexicographic order; blocks are ordered by their smallest edge.
struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> uncovered;  // edges in no triangle
};

template <std::size_t W>
BlockDecomposition triangle_blocks(const BasicGraph<W>& g);

/// s if `block` is exactly a book B_s (a spine plus s pages), else nullopt.
/// Throws if some block edge is missing from `host`.
template <std::size_t W>
std::optional<int> is_book(std::span<const Edge> block, const BasicGraph<W>& host);

enum class LightMode {
  unique_triangle,  // light iff the edge lies in exactly one triangle
  codegree_two,     // light iff the edge has codegree exactly 2
};

/// Partition of the edges lying in at least one triangle.
struct EdgeClassification {
  LightMode mode = LightMode::unique_triangle;
  std::vector<Edge> light;
  std::vector<Edge> heavy;
};

template <std::size_t W>
EdgeClassification classify_edges(const BasicGraph<W>& g, LightMode mode);

/// Breadth-first levels from `root`, with e(L_i) and e(L_i, L_{i+1}).
template <std::size_t W>
struct BasicBfsLevels {
  int root = 0;
  std::vector<BasicVertexSet<W>> levels;
  std::vector<int> within;   // e(L_i)
  std::vector<int> between;  // e(L_i, L_{i+1}); one shorter than levels
};
using BfsLevels = BasicBfsLevels<1>;

template <std::size_t W>
BasicBfsLevels<W> bfs_levels(const BasicGraph<W>& g, int root);

struct LevelViolation {
  int level = 0;
  bool between = false;  // false: e(L_i) bound, true: e(L_i, L_{i+1}) bound
  std::int64_t value = 0;
  std::int64_t bound = 0;
};

/// Checks e(L_i) <= (k-1)|L_i| and e(L_i,L_{i+1}) <= (k-1)(|L_i|+|L_{i+1}|)
/// for 1 <= i < k. Missing levels count as empty. Reports only; a violation
/// is legal whenever the host contains C_{2k}. Throws on k < 2.
template <std::size_t W>
std::vector<LevelViolation> check_level_inequalities(const BasicBfsLevels<W>& levels, int k);

/// Number of a-sets of triangles sharing a common edge, in both forms.
struct HyperedgeCount {
  std::uint64_t by_edges = 0;    // sum over edges uv of C(codeg(u,v), a)
  std::uint64_t by_subsets = 0;  // sum over a-sets S of e(N(S))
  [[nodiscard]] bool agree() const { return by_edges == by_subsets; }
};

template <std::size_t W>
HyperedgeCount shared_edge_hyperedge_count(const BasicGraph<W>& g, int a);

/// Triangles of G (list_triangles order) joined when they share an edge.
struct TriangleShareGraph {
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor indices
};

template <std::size_t W>
TriangleShareGraph triangle_share_graph(const BasicGraph<W>& g);

struct PackingOptions {
  std::size_t exact_limit = 10000;  // triangle count above which greedy is used
  bool force_greedy = false;
};

struct Packing {
  std::vector<Triangle> triangles;
  bool exact = false;
};

/// Maximum set of pairwise edge-disjoint triangles (maximum independent set of
/// the triangle-share graph) by branch and bound, or a maximal packing from a
/// minimum-degree greedy pass when the exact mode is off or over its limit.
template <std::size_t W>
Packing max_edge_disjoint_triangles(const BasicGraph<W>& g, const PackingOptions& options = {});

/// ((r-1)/r) n / d^(1/(r-1)), or n when d = 0. Average degrees in (0, 1) are
/// evaluated at d = 1, where the bound still holds. Throws on r < 2 or
/// negative input.
double spencer_lower_bound(double n, int r, double d);

/// Slack used when comparing spencer_lower_bound against integers.
inline constexpr double kSpencerSlack = 1e-9;

struct ChordedCycle {
  std::vector<int> cycle;  // consecutive vertices, closing back to the first
  Edge chord;
};

struct CycleSearch {
  std::optional<ChordedCycle> witness;
  bool exhausted = false;  // node budget ran out before a decision
};

/// Depth-first search over simple cycles for one of length >= k+1 that has a
/// chord. Throws on k < 3. Average degree k does not force one: K_{2,6} has
/// average degree 3 and only chordless 4-cycles.
template <std::size_t W>
CycleSearch find_long_cycle_with_chord(const BasicGraph<W>& g, int k, std::uint64_t node_budget = 50'000'000);

/// Checks that `w` is a cycle of g of length >= k+1 with a chord between two
/// non-consecutive cycle vertices.
template <std::size_t W>
bool valid_chorded_cycle(const BasicGraph<W>& g, const ChordedCycle& w, int k);

}  // namespace turan
