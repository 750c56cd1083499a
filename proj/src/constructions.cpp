#include "turan/constructions.hpp"

#include <stdexcept>

#include "turan/graph_ops.hpp"
#include "turan/pattern.hpp"

namespace turan {

namespace {

int half_part(int k) { return (k - 1) / 2; }

}  // namespace

void validate(const ConstructionSpec& spec) {
  if (spec.family == Family::hn) {
    if (spec.n < 4 || spec.n % 4 != 0) {
      throw std::invalid_argument("hn needs n >= 4 with n divisible by 4, got n=" + std::to_string(spec.n));
    }
    return;
  }
  if (spec.k < 3) throw std::invalid_argument("fnk needs k >= 3, got k=" + std::to_string(spec.k));
  const int modulus = 4 * half_part(spec.k);
  if (spec.n < modulus || spec.n % modulus != 0) {
    throw std::invalid_argument("fnk with k=" + std::to_string(spec.k) + " needs n divisible by " +
                                std::to_string(modulus) + ", got n=" + std::to_string(spec.n));
  }
}

template <std::size_t W>
BasicGraph<W> build_hn(int n) {
  validate({Family::hn, n, 0});
  const int half = n / 2;
  std::vector<Edge> edges;
  for (int a = 0; a < half; ++a)
    for (int b = half; b < n; ++b) edges.emplace_back(a, b);
  for (int v = 0; v < n; v += 2) edges.emplace_back(v, v + 1);
  return BasicGraph<W>(n, edges);
}

template <std::size_t W>
BasicGraph<W> build_fnk(int n, int k) {
  validate({Family::fnk, n, k});
  const int half = n / 2;
  const int m = half_part(k);
  std::vector<Edge> edges;
  for (int a = 0; a < half; ++a)
    for (int b = half; b < n; ++b) edges.emplace_back(a, b);
  for (int base = 0; base < half; base += 2 * m)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) edges.emplace_back(base + i, base + m + j);
  return BasicGraph<W>(n, edges);
}

template <std::size_t W>
BasicGraph<W> build_construction(const ConstructionSpec& spec) {
  return spec.family == Family::hn ? build_hn<W>(spec.n) : build_fnk<W>(spec.n, spec.k);
}

std::int64_t construction_formula(const ConstructionSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.n;
  if (spec.family == Family::hn) return n * n / 4;
  return half_part(spec.k) * n * n / 8;
}

bool ConstructionReport::ok() const {
  if (triangles != formula) return false;
  for (const auto& [name, free] : freeness) {
    if (!free) return false;
  }
  return true;
}

namespace {

template <std::size_t W>
ConstructionReport verify_with(const ConstructionSpec& spec) {
  const BasicGraph<W> g = build_construction<W>(spec);
  ConstructionReport report;
  report.triangles = triangle_count(g);
  report.formula = construction_formula(spec);
  report.edges = g.edge_count();
  auto flag = [&](const std::string& label, const std::string& pattern) {
    report.freeness.emplace_back(label, !contains_subgraph(g, catalog_get(pattern)));
  };
  if (spec.family == Family::hn) {
    flag("k122_free", "k122");
    flag("c4hat_free", "suspension:cycle:4");
    flag("c6hat_free", "suspension:cycle:6");
  } else {
    flag("p" + std::to_string(spec.k) + "hat_free", "suspension:path:" + std::to_string(spec.k));
  }
  return report;
}

}  // namespace

ConstructionReport verify_construction(const ConstructionSpec& spec) {
  validate(spec);
  if (spec.n <= Graph::kMaxVertices) return verify_with<1>(spec);
  if (spec.n <= WideGraph::kMaxVertices) return verify_with<4>(spec);
  throw std::invalid_argument("n=" + std::to_string(spec.n) + " exceeds the wide vertex cap");
}

template Graph build_hn<1>(int);
template WideGraph build_hn<4>(int);
template Graph build_fnk<1>(int, int);
template WideGraph build_fnk<4>(int, int);
template Graph build_construction<1>(const ConstructionSpec&);
template WideGraph build_construction<4>(const ConstructionSpec&);

}  // namespace turan
