#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

/// Largest order accepted by the isomorph-free generator.
inline constexpr int kMaxEnumerationOrder = 11;

/// Canonical labeling: `code` is the largest adjacency code over the leaves of
/// an individualization-refinement tree, so two graphs are isomorphic iff
/// their codes agree. Pair (i, j), i < j, sits at bit j(j-1)/2 + i.
struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<int> position;  // position[v]: canonical index of vertex v
};

/// Throws std::invalid_argument above kMaxEnumerationOrder.
CanonicalForm canonical_form(const Graph& g);

/// The graph on n vertices whose adjacency code is `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// One canonically labeled representative per isomorphism class on n
/// vertices, in increasing code order. Built by vertex addition with
/// canonical deduplication; workers split the parents of the last level.
/// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n, int threads = 1);

/// Same, restricted to graphs containing no pattern of `forbidden`. Since
/// freeness is hereditary only free parents are extended.
std::vector<Graph> enumerate_free_graphs(int n, std::span<const Pattern> forbidden, int threads = 1);

enum class SearchMethod { exhaustive, local_search };

std::string to_string(SearchMethod m);

struct ExtremalRecord {
  int n = 0;
  std::vector<std::string> forbidden;  // sorted catalog names
  std::int64_t max_triangles = 0;
  Graph witness;
  // Exhaustive: free labeled extensions evaluated at order n.
  // Local search: freeness tests performed.
  std::uint64_t graphs_scanned = 0;
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t seed = 0;    // local search only
  std::uint64_t budget = 0;  // local search only
};

struct ExactOptions {
  bool prune = true;  // skip parents P with t(P) + e(P) below the incumbent
  int threads = 1;
  // Checks t = (1/3) sum_v e(N(v)) on every evaluated graph, and
  // t <= (k-1)/3 e when the forbidden set is a single suspended path P_k.
  // A failure throws std::logic_error.
  bool check_identities = false;
};

/// ex(n, K3, F) by exhaustive search. The witness is the maximizer with the
/// smallest canonical code, so it does not depend on threads or pruning.
/// graphs_scanned is reproducible with one worker; with several workers and
/// pruning it depends on when the incumbent rises.
ExtremalRecord exact_extremal(int n, std::span<const Pattern> forbidden, const ExactOptions& options = {});

/// Hill climbing over single edge toggles from `start` (edgeless when absent):
/// repeatedly add the edge of largest triangle gain that keeps g free, ties to
/// the smallest pair; at a local optimum drop a few random edges and climb
/// again, restarting from `start` periodically. `budget` caps freeness tests.
/// Throws std::invalid_argument if `start` is not free or has the wrong order.
ExtremalRecord local_search_lower_bound(int n, std::span<const Pattern> forbidden, std::uint64_t budget,
                                        std::uint64_t seed, const std::optional<Graph>& start = std::nullopt);

/// Forbidden set without closed-form bounds.
class UnsupportedBound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundCheck {
  std::string name;
  bool upper = true;   // false: construction lower bound
  double bound = 0;
  bool holds = true;   // upper: value within the bound; lower: value reaches it
  double slack = 0;    // upper: bound - value; lower: value - bound
};

/// Closed-form bounds for a single forbidden suspended path, K_{1,a,b}, or
/// suspended even cycle. Throws UnsupportedBound for anything else.
std::vector<BoundCheck> verify_bounds(const ExtremalRecord& record);

/// True when every upper bound holds and, for exhaustive records, every
/// construction lower bound is reached.
bool bounds_consistent(const ExtremalRecord& record, std::span<const BoundCheck> checks);

/// Triangle count of the family construction available at n, if any.
std::optional<std::int64_t> construction_baseline(int n, std::span<const std::string> forbidden);

}  // namespace turan
