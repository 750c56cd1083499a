#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// A named small graph from the catalog.
///
/// `realization` fixes a canonical vertex order; witnesses report images in
/// that order. Suspensions keep a handle to their inner pattern so detectors
/// can search neighborhoods instead of the whole host; the apex is always the
/// last vertex of the realization.
struct Pattern {
  std::string name;
  Graph realization;
  std::shared_ptr<const Pattern> inner;

  [[nodiscard]] int order() const { return realization.order(); }
  [[nodiscard]] bool is_suspension() const { return inner != nullptr; }
};

/// Image of pattern vertex i is `embedding[i]`.
using Embedding = std::vector<int>;

/// Resolves a catalog name, e.g. `k222`, `w5plus`, `k6-2-1`, `book:3`,
/// `complete-bipartite:2,3`, `suspension:path:4`.
/// Throws std::invalid_argument for unknown names or bad parameters.
Pattern catalog_get(std::string_view name);

/// Fixed (non-parametric) catalog names.
std::vector<std::string> catalog_fixed_names();

/// Parses a comma separated list of names. Parametric names containing commas
/// (complete-bipartite:a,b) are recognised by their numeric continuation.
std::vector<Pattern> parse_pattern_list(std::string_view list);

/// Suspension of an arbitrary pattern. Throws if `inner` has an isolated vertex.
Pattern make_suspension(const Pattern& inner);

/// Subgraph (not induced) containment. Suspension patterns are decided via
/// the neighborhood shortcut.
template <std::size_t W>
bool contains_subgraph(const BasicGraph<W>& g, const Pattern& p);

/// Plain backtracking containment that ignores the suspension shortcut.
template <std::size_t W>
bool contains_subgraph_generic(const BasicGraph<W>& g, const Pattern& p);

/// True iff some vertex v has `inner` inside G[N(v)].
template <std::size_t W>
bool contains_suspension(const BasicGraph<W>& g, const Pattern& inner);

/// Canonical witness: the lexicographically smallest image set, then the
/// lexicographically smallest map onto it (pattern vertices in catalog order).
template <std::size_t W>
std::optional<Embedding> find_embedding(const BasicGraph<W>& g, const Pattern& p);

/// Copies of `p` that use vertex `x`.
template <std::size_t W>
bool contains_subgraph_through_vertex(const BasicGraph<W>& g, const Pattern& p, int x);

/// Copies of `p` that contain both u and v. When g minus the edge uv is
/// p-free this is exactly "adding uv created a copy".
template <std::size_t W>
bool contains_subgraph_through_pair(const BasicGraph<W>& g, const Pattern& p, int u, int v);

/// No pattern of `forbidden` is contained in g.
template <std::size_t W>
bool is_free(const BasicGraph<W>& g, std::span<const Pattern> forbidden);

/// First (in list order) contained pattern together with its canonical witness.
struct FoundPattern {
  std::size_t index = 0;
  Embedding witness;
};
template <std::size_t W>
std::optional<FoundPattern> find_forbidden(const BasicGraph<W>& g, std::span<const Pattern> forbidden);

/// Calls `visit` for every embedding of p in g (no symmetry reduction).
/// Returning false from `visit` stops the enumeration.
template <std::size_t W>
void for_each_embedding(const BasicGraph<W>& g, const Pattern& p,
                        const std::function<bool(std::span<const int>)>& visit);

}  // namespace turan
