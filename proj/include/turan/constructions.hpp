#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class Family { hn, fnk };

struct ConstructionSpec {
  Family family = Family::hn;
  int n = 0;
  int k = 0;  // fnk only
};

/// Complete bipartite A,B with |A| = |B| = n/2 plus a perfect matching inside
/// each side. A = {0..n/2-1}; matching edges pair consecutive vertices.
/// Requires n >= 4 and 4 | n.
template <std::size_t W = 1>
BasicGraph<W> build_hn(int n);

/// Complete bipartite A,B plus, inside A, disjoint copies of K_{m,m} with
/// m = floor((k-1)/2). Each copy occupies 2m consecutive ids of A, first m
/// ids on one side. Requires k >= 3 and 4m | n.
template <std::size_t W = 1>
BasicGraph<W> build_fnk(int n, int k);

template <std::size_t W = 1>
BasicGraph<W> build_construction(const ConstructionSpec& spec);

/// Closed-form triangle count: n^2/4 for hn, m n^2/8 for fnk.
std::int64_t construction_formula(const ConstructionSpec& spec);

/// Throws std::invalid_argument naming the violated divisibility.
void validate(const ConstructionSpec& spec);

struct ConstructionReport {
  std::int64_t triangles = 0;
  std::int64_t formula = 0;
  int edges = 0;
  /// (flag name, value), e.g. ("k122_free", true).
  std::vector<std::pair<std::string, bool>> freeness;

  [[nodiscard]] bool ok() const;
};

/// Builds the graph (wide variant above 64 vertices), counts its triangles
/// and runs the detectors the construction is meant to avoid.
ConstructionReport verify_construction(const ConstructionSpec& spec);

}  // namespace turan
