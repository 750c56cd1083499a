#pragma once

// Brute-force reference implementations. They only read adjacency through
// `adjacent()` so they share no counting logic with the library.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "turan/graph.hpp"

namespace oracle {

template <class G>
std::int64_t triangles(const G& g) {
  std::int64_t t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++t;
  return t;
}

template <class G>
int edges(const G& g) {
  int e = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) e += g.adjacent(a, b) ? 1 : 0;
  return e;
}

template <class G>
int common(const G& g, int u, int v) {
  int c = 0;
  for (int w = 0; w < g.order(); ++w) c += (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
  return c;
}

// Ordered k-edge paths by extending every sequence.
template <class G>
std::uint64_t ordered_paths(const G& g, int k) {
  std::uint64_t total = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == k + 1) {
      ++total;
      return;
    }
    for (int w = 0; w < g.order(); ++w) {
      if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      if (!seq.empty() && !g.adjacent(seq.back(), w)) continue;
      seq.push_back(w);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return total;
}

// Subgraph containment by trying every injective map of the pattern.
template <class G, class P>
bool contains(const G& g, const P& p) {
  const int k = p.order();
  const int n = g.order();
  if (k > n) return false;
  std::vector<int> img(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.adjacent(i, j) && !g.adjacent(v, img[static_cast<std::size_t>(j)])) ok = false;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      img[static_cast<std::size_t>(i)] = v;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Size of a maximum set of pairwise edge-disjoint triangles, by trying every
// subset of the triangle list (only for short lists).
template <class G>
int max_disjoint_triangles(const G& g) {
  std::vector<std::array<int, 3>> tris;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) tris.push_back({a, b, c});
  const std::size_t m = tris.size();
  auto edge_id = [n](int u, int v) { return u * n + v; };
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      const auto& t = tris[i];
      for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
        char& s = seen[static_cast<std::size_t>(edge_id(u, v))];
        if (s) ok = false;
        s = 1;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Some cycle of length >= k+1 has a chord, by extending every simple path
// that starts at its smallest vertex.
template <class G>
bool has_chorded_cycle(const G& g, int k) {
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  auto chorded = [&]() {
    const std::size_t len = path.size();
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 2; j < len; ++j)
        if (!(i == 0 && j == len - 1) && g.adjacent(path[i], path[j])) return true;
    return false;
  };
  auto rec = [&](auto&& self) -> bool {
    const int last = path.back();
    if (static_cast<int>(path.size()) >= k + 1 && g.adjacent(last, path.front()) && chorded()) return true;
    for (int v = path.front() + 1; v < n; ++v) {
      if (on[static_cast<std::size_t>(v)] || !g.adjacent(last, v)) continue;
      on[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      on[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on.assign(static_cast<std::size_t>(n), 0);
    on[static_cast<std::size_t>(s)] = 1;
    if (rec(rec)) return true;
  }
  return false;
}

// Graph with every pair present independently with probability p.
inline turan::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<turan::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return turan::Graph(n, e);
}

// Every labelled graph on n vertices (n <= 6 keeps this at 32768).
template <class F>
void all_labelled(int n, F&& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<turan::Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) e.emplace_back(pairs[i].first, pairs[i].second);
    visit(turan::Graph(n, e));
  }
}

}  // namespace oracle
