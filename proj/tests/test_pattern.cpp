#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/graph_ops.hpp"
#include "turan/pattern.hpp"

using namespace turan;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
  return g;
}

bool valid_embedding(const Graph& g, const Pattern& p, const Embedding& m) {
  if (static_cast<int>(m.size()) != p.order()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i] == m[j]) return false;
      if (p.realization.adjacent(static_cast<int>(i), static_cast<int>(j)) && !g.adjacent(m[i], m[j])) return false;
    }
  return true;
}

// Suspension inners small enough for exhaustive checks at n <= 7.
const std::vector<std::string> kInners = {"path:2", "path:3", "path:4", "path:5", "cycle:3",
                                          "cycle:4", "cycle:5", "cycle:6", "complete-bipartite:1,2",
                                          "complete-bipartite:2,2", "complete:4", "k5-minus"};

}  // namespace

TEST_CASE("catalog realizations are pinned") {
  CHECK(catalog_get("k222").realization ==
        Graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}));
  CHECK(catalog_get("q32").realization ==
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}}));
  CHECK(catalog_get("w5plus").realization ==
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {0, 2}}));
  CHECK(catalog_get("book:2").realization == Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  CHECK(catalog_get("complete-bipartite:1,2").realization == Graph(3, {{0, 1}, {0, 2}}));
  CHECK(catalog_get("suspension:path:2").realization == Graph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  CHECK(catalog_get("k6-2-1").realization == complete(6).without_edge(0, 1).without_edge(1, 2));
  CHECK(catalog_get("k6-2-2").realization == complete(6).without_edge(0, 1).without_edge(2, 3));
  CHECK(catalog_get("k6-3-1").realization ==
        complete(6).without_edge(0, 1).without_edge(1, 2).without_edge(2, 3));
  CHECK(catalog_get("k6-3-2").realization ==
        complete(6).without_edge(0, 1).without_edge(2, 3).without_edge(3, 4));
}

TEST_CASE("catalog vertex, edge and triangle counts") {
  struct Expect {
    const char* name;
    int n, e;
    std::int64_t t;
  };
  const Expect table[] = {
      {"k4", 4, 6, 4},         {"k5", 5, 10, 10},      {"k6", 6, 15, 20},      {"k5-minus", 5, 9, 7},
      {"k6-minus", 6, 14, 16}, {"k6-2-1", 6, 13, 13},  {"k6-2-2", 6, 13, 12},  {"k6-3-1", 6, 12, 10},
      {"k6-3-2", 6, 12, 9},    {"k222", 6, 12, 8},     {"q32", 6, 11, 6},      {"w4", 5, 8, 4},
      {"k122", 5, 8, 4},       {"w5", 6, 10, 5},       {"w5plus", 6, 11, 7},   {"book:3", 5, 7, 3},
      {"path:4", 5, 4, 0},     {"cycle:6", 6, 6, 0},   {"suspension:path:4", 6, 9, 4},
      {"suspension:cycle:6", 7, 12, 6},                {"complete-bipartite:2,3", 5, 6, 0},
  };
  for (const auto& x : table) {
    CAPTURE(x.name);
    const Pattern p = catalog_get(x.name);
    CHECK(p.order() == x.n);
    CHECK(p.realization.edge_count() == x.e);
    CHECK(triangle_count(p.realization) == x.t);
    CHECK(oracle::triangles(p.realization) == x.t);
  }
}

TEST_CASE("catalog is deterministic, connected and aliased") {
  for (const auto& name : catalog_fixed_names()) {
    CAPTURE(name);
    const Pattern a = catalog_get(name);
    const Pattern b = catalog_get(name);
    CHECK(a.realization == b.realization);
    CHECK(a.name == name);
    // Connected: a search from vertex 0 reaches everything.
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= a.realization.neighbors(v);
      next -= seen;
      seen |= next;
      frontier = next;
    }
    CHECK(seen == a.realization.vertices());
  }
  CHECK(catalog_get("w4").realization == catalog_get("k122").realization);
  CHECK(catalog_get("w5").realization == catalog_get("suspension:cycle:5").realization);
}

TEST_CASE("catalog rejects bad names and parameters") {
  for (const char* bad : {"k7", "", "path:0", "path:x", "path:", "cycle:2", "complete-bipartite:3,2",
                          "complete-bipartite:0,1", "complete-bipartite:2", "book:0", "suspension:",
                          "suspension:nothing", "path:-1", "PATH:3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog_get(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(make_suspension(Pattern{"two-points", Graph(2), nullptr}), std::invalid_argument);
}

TEST_CASE("pattern lists split parametric names") {
  const auto list = parse_pattern_list("suspension:path:4,k4,complete-bipartite:2,3, k122");
  REQUIRE(list.size() == 4);
  CHECK(list[0].name == "suspension:path:4");
  CHECK(list[2].name == "complete-bipartite:2,3");
  CHECK(list[3].name == "k122");
  CHECK_THROWS_AS(parse_pattern_list("k4,,k5"), std::invalid_argument);
}

TEST_CASE("containment examples") {
  CHECK_FALSE(contains_subgraph(complete(4), catalog_get("k5")));
  CHECK_FALSE(contains_subgraph(catalog_get("k222").realization, catalog_get("suspension:path:4")));
  CHECK(contains_subgraph(catalog_get("k122").realization, catalog_get("suspension:path:3")));

  CHECK(contains_suspension(catalog_get("w5").realization, catalog_get("cycle:5")));
  CHECK_FALSE(contains_suspension(complete(5), catalog_get("path:4")));
  CHECK_THROWS_AS(contains_suspension(complete(5), Pattern{"gap", Graph(3, {{0, 1}}), nullptr}),
                  std::invalid_argument);

  const std::vector<Pattern> p3hat{catalog_get("suspension:path:3")};
  const std::vector<Pattern> p4hat{catalog_get("suspension:path:4")};
  CHECK(is_free(complete(4), std::span<const Pattern>(p3hat)));
  CHECK_FALSE(is_free(complete(6), std::span<const Pattern>(p4hat)));
}

TEST_CASE("matcher agrees with brute force") {
  std::mt19937_64 rng(3);
  std::vector<Pattern> patterns;
  for (const auto& name : catalog_fixed_names()) patterns.push_back(catalog_get(name));
  for (const auto& name : kInners) patterns.push_back(catalog_get("suspension:" + name));
  for (const char* name : {"path:3", "cycle:5", "book:2", "complete-bipartite:2,3"}) patterns.push_back(catalog_get(name));

  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.35 + 0.1 * static_cast<double>(trial % 6), rng);
    for (const Pattern& p : patterns) {
      CAPTURE(p.name);
      const bool expect = oracle::contains(g, p.realization);
      CHECK(contains_subgraph(g, p) == expect);
      CHECK(contains_subgraph_generic(g, p) == expect);
      const auto w = find_embedding(g, p);
      CHECK(w.has_value() == expect);
      if (w) CHECK(valid_embedding(g, p, *w));
    }
  }
}

TEST_CASE("witness is the smallest image set, then the smallest map") {
  std::mt19937_64 rng(5);
  const Pattern p = catalog_get("k122");
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(7, 0.6, rng);
    std::optional<Embedding> best;
    std::vector<int> best_set;
    for_each_embedding(g, p, [&](std::span<const int> m) {
      std::vector<int> img(m.begin(), m.end());
      std::vector<int> set = img;
      std::sort(set.begin(), set.end());
      if (!best || set < best_set || (set == best_set && img < *best)) {
        best = img;
        best_set = set;
      }
      return true;
    });
    CHECK(find_embedding(g, p) == best);
  }
}

TEST_CASE("for_each_embedding counts automorphisms") {
  int count = 0;
  for_each_embedding(complete(4), catalog_get("k4"), [&](std::span<const int>) {
    ++count;
    return true;
  });
  CHECK(count == 24);
  count = 0;
  for_each_embedding(catalog_get("w5").realization, catalog_get("w5"), [&](std::span<const int>) {
    ++count;
    return true;
  });
  CHECK(count == 10);
}

TEST_CASE("suspension shortcut matches the generic detector on every graph up to six vertices") {
  std::vector<Pattern> inners;
  for (const auto& name : kInners) inners.push_back(catalog_get(name));
  for (int n = 1; n <= 6; ++n) {
    oracle::all_labelled(n, [&](const Graph& g) {
      for (const Pattern& h : inners) {
        const Pattern hat = make_suspension(h);
        if (contains_suspension(g, h) != contains_subgraph_generic(g, hat)) {
          FAIL("mismatch for " << hat.name << " on n=" << n);
        }
      }
    });
  }
}

TEST_CASE("incremental detectors see exactly the new copies") {
  std::mt19937_64 rng(9);
  const std::vector<Pattern> patterns{catalog_get("suspension:path:3"), catalog_get("suspension:path:4"),
                                      catalog_get("k4"), catalog_get("k122"), catalog_get("complete-bipartite:2,2")};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    for (const Pattern& p : patterns) {
      CAPTURE(p.name);
      const int x = static_cast<int>(rng() % static_cast<unsigned>(n));
      // Through x: contained in g but not in g with x isolated.
      Graph cut = g;
      for (int w : g.neighbors(x)) cut = cut.without_edge(x, w);
      const bool through_x = contains_subgraph(g, p) && !contains_subgraph(cut, p);
      if (!contains_subgraph(cut, p)) CHECK(contains_subgraph_through_vertex(g, p, x) == through_x);
      if (!contains_subgraph_through_vertex(g, p, x)) CHECK(contains_subgraph(g, p) == contains_subgraph(cut, p));

      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = (u + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))) % n;
      const Graph before = g.without_edge(u, v);
      if (!contains_subgraph(before, p)) {
        CHECK(contains_subgraph_through_pair(g.with_edge(u, v), p, u, v) == contains_subgraph(g.with_edge(u, v), p));
      }
    }
  }
}

TEST_CASE("adding edges preserves containment") {
  std::mt19937_64 rng(13);
  const Pattern p = catalog_get("suspension:path:3");
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(7, 0.3, rng);
    bool was = contains_subgraph(g, p);
    for (int step = 0; step < 10; ++step) {
      const int u = static_cast<int>(rng() % 7);
      const int v = (u + 1 + static_cast<int>(rng() % 6)) % 7;
      g = g.with_edge(u, v);
      const bool now = contains_subgraph(g, p);
      if (was) CHECK(now);
      was = now;
    }
  }
}

TEST_CASE("wide graphs use the same matcher") {
  WideGraph g(100);
  g = g.with_edge(97, 98).with_edge(98, 99).with_edge(97, 99).with_edge(10, 97).with_edge(10, 98).with_edge(10, 99);
  CHECK(contains_subgraph(g, catalog_get("k4")));
  CHECK(find_embedding(g, catalog_get("k4")) == Embedding{10, 97, 98, 99});
  CHECK_FALSE(contains_subgraph(g, catalog_get("suspension:path:3")));
}
