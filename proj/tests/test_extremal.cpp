#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/graph_ops.hpp"

using namespace turan;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
  return Graph(g.order(), e);
}

// Smallest adjacency code over all n! relabelings.
std::uint64_t brute_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < g.order(); ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Pattern> one(const char* name) { return {catalog_get(name)}; }

// Oracle: max triangles over every labelled graph on n <= 6 vertices.
std::int64_t brute_extremal(int n, const std::vector<Pattern>& forbidden) {
  std::int64_t best = 0;
  oracle::all_labelled(n, [&](const Graph& g) {
    for (const Pattern& p : forbidden)
      if (oracle::contains(g, p.realization)) return;
    best = std::max(best, oracle::triangles(g));
  });
  return best;
}

}  // namespace

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = canonical_form(g);
    const auto b = canonical_form(relabel(g, perm));
    CHECK(a.code == b.code);
    // position really relabels g onto the code.
    CHECK(relabel(g, a.position) == graph_from_code(n, a.code));
  }
  CHECK_THROWS_AS(canonical_form(Graph(12)), std::invalid_argument);
}

TEST_CASE("canonical codes separate isomorphism classes") {
  // Same partition of labelled graphs as the brute-force minimum code.
  for (int n = 1; n <= 5; ++n) {
    std::map<std::uint64_t, std::uint64_t> ours_to_brute;
    std::set<std::uint64_t> brute_classes;
    oracle::all_labelled(n, [&](const Graph& g) {
      const std::uint64_t ours = canonical_form(g).code;
      const std::uint64_t brute = brute_canonical(g);
      brute_classes.insert(brute);
      auto [it, inserted] = ours_to_brute.emplace(ours, brute);
      CHECK(it->second == brute);
    });
    CHECK(ours_to_brute.size() == brute_classes.size());
  }
}

TEST_CASE("enumerate_graphs counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == expected[static_cast<std::size_t>(n - 1)]);
    if (n <= 6) {
      std::set<std::uint64_t> brute;
      for (const Graph& g : graphs) brute.insert(brute_canonical(g));
      CHECK(brute.size() == graphs.size());
    }
  }
  CHECK(enumerate_graphs(7, 3).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(12), std::invalid_argument);
}

TEST_CASE("enumerate_graphs count on nine vertices") {
  CHECK(enumerate_graphs(9).size() == 274668);
}

TEST_CASE("enumerate_free_graphs keeps exactly the free classes") {
  const auto forbidden = one("k4");
  for (int n = 4; n <= 7; ++n) {
    std::size_t free = 0;
    for (const Graph& g : enumerate_graphs(n))
      if (!oracle::contains(g, forbidden[0].realization)) ++free;
    CHECK(enumerate_free_graphs(n, forbidden).size() == free);
  }
}

TEST_CASE("exact_extremal examples") {
  CHECK(exact_extremal(4, one("suspension:path:3")).max_triangles == 4);
  CHECK(exact_extremal(5, one("suspension:path:3")).max_triangles == 4);
  CHECK(exact_extremal(5, one("suspension:path:4")).max_triangles == 10);
  const auto r = exact_extremal(6, one("suspension:path:3"));
  CHECK(r.max_triangles == brute_extremal(6, one("suspension:path:3")));
  CHECK(r.method == SearchMethod::exhaustive);
  CHECK(r.forbidden == std::vector<std::string>{"suspension:path:3"});
  CHECK(triangle_count(r.witness) == r.max_triangles);
  CHECK_FALSE(oracle::contains(r.witness, catalog_get("suspension:path:3").realization));
  CHECK(exact_extremal(1, one("k3")).max_triangles == 0);
}

TEST_CASE("exact_extremal agrees with brute force on six vertices") {
  for (const char* name : {"k3", "k4", "k122", "w5", "book:2", "suspension:path:2", "suspension:cycle:4",
                           "k5-minus", "cycle:4", "path:3"}) {
    CAPTURE(name);
    const auto f = one(name);
    for (int n = 3; n <= 6; ++n) CHECK(exact_extremal(n, f).max_triangles == brute_extremal(n, f));
  }
}

TEST_CASE("exact_extremal is independent of pruning and workers") {
  for (const auto& name : catalog_fixed_names()) {
    CAPTURE(name);
    const auto f = one(name.c_str());
    for (int n = 2; n <= 6; ++n) {
      const auto pruned = exact_extremal(n, f, {true, 1, true});
      const auto full = exact_extremal(n, f, {false, 1, false});
      const auto threaded = exact_extremal(n, f, {true, 3, false});
      CHECK(pruned.max_triangles == full.max_triangles);
      CHECK(threaded.max_triangles == full.max_triangles);
      CHECK(pruned.witness == full.witness);
      CHECK(threaded.witness == full.witness);
      CHECK(pruned.graphs_scanned <= full.graphs_scanned);
    }
  }
}

TEST_CASE("exact_extremal is monotone in n") {
  for (const char* name : {"suspension:path:3", "k122", "suspension:path:4"}) {
    std::int64_t last = 0;
    for (int n = 1; n <= 8; ++n) {
      const auto r = exact_extremal(n, one(name), {true, 1, true});
      CHECK(r.max_triangles >= last);
      last = r.max_triangles;
    }
  }
}

TEST_CASE("local_search_lower_bound examples") {
  const auto h = local_search_lower_bound(8, one("k122"), 2000, 1, build_hn(8));
  CHECK(h.max_triangles >= 16);
  CHECK(h.method == SearchMethod::local_search);
  CHECK_FALSE(contains_subgraph(h.witness, catalog_get("k122")));
  CHECK(triangle_count(h.witness) == h.max_triangles);

  const auto f = local_search_lower_bound(8, one("suspension:path:5"), 2000, 1, build_fnk(8, 5));
  CHECK(f.max_triangles >= 16);

  const auto k3 = local_search_lower_bound(6, one("k3"), 500, 9);
  CHECK(k3.max_triangles == 0);

  CHECK_THROWS_AS(local_search_lower_bound(8, one("k4"), 10, 1, build_hn(8)), std::invalid_argument);
  CHECK_THROWS_AS(local_search_lower_bound(9, one("k4"), 10, 1, build_hn(8)), std::invalid_argument);
}

TEST_CASE("local_search_lower_bound is reproducible and sound") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 10; ++round) {
    const int n = 6 + round % 5;
    const std::uint64_t seed = rng();
    const auto f = one(round % 2 ? "suspension:path:3" : "k122");
    const auto a = local_search_lower_bound(n, f, 3000, seed);
    const auto b = local_search_lower_bound(n, f, 3000, seed);
    CHECK(a.max_triangles == b.max_triangles);
    CHECK(a.witness == b.witness);
    CHECK(a.graphs_scanned <= 3000);
    CHECK_FALSE(oracle::contains(a.witness, f[0].realization));
    if (n <= 7) CHECK(a.max_triangles <= exact_extremal(n, f).max_triangles);
  }
}

TEST_CASE("verify_bounds examples") {
  const auto r6 = exact_extremal(6, one("suspension:path:3"));
  const auto checks = verify_bounds(r6);
  const auto strict = std::find_if(checks.begin(), checks.end(),
                                   [](const BoundCheck& c) { return c.name == "p3hat_linear_error"; });
  REQUIRE(strict != checks.end());
  CHECK(strict->bound == doctest::Approx(22.5));
  CHECK(strict->holds);
  CHECK(bounds_consistent(r6, checks));

  const auto r5 = exact_extremal(5, one("suspension:path:4"));
  const auto c5 = verify_bounds(r5);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].name == "pkhat_upper");
  CHECK(c5[0].bound == doctest::Approx(10.0));
  CHECK(c5[0].holds);
  CHECK(c5[0].slack == doctest::Approx(0.0));

  ExtremalRecord cyc;
  cyc.n = 5;
  cyc.forbidden = {"cycle:5"};
  CHECK_THROWS_AS(verify_bounds(cyc), UnsupportedBound);
}

TEST_CASE("verify_bounds constructions and failures") {
  const auto r8 = exact_extremal(8, one("k122"));
  const auto c8 = verify_bounds(r8);
  REQUIRE(c8.size() == 1);
  CHECK(c8[0].name == "hn_construction");
  CHECK_FALSE(c8[0].upper);
  CHECK(c8[0].holds);
  CHECK(r8.max_triangles >= 16);

  // A record over the upper bound is flagged.
  ExtremalRecord fake;
  fake.n = 6;
  fake.forbidden = {"suspension:path:3"};
  fake.max_triangles = 23;
  const auto bad = verify_bounds(fake);
  CHECK_FALSE(bounds_consistent(fake, bad));

  // A heuristic below a construction is not a failure.
  ExtremalRecord weak;
  weak.n = 8;
  weak.forbidden = {"suspension:path:5"};
  weak.max_triangles = 3;
  weak.method = SearchMethod::local_search;
  CHECK(bounds_consistent(weak, verify_bounds(weak)));
  weak.method = SearchMethod::exhaustive;
  CHECK_FALSE(bounds_consistent(weak, verify_bounds(weak)));

  CHECK(construction_baseline(16, std::vector<std::string>{"suspension:path:5"}) == 64);
  CHECK(construction_baseline(12, std::vector<std::string>{"suspension:cycle:6"}) == 36);
  CHECK_FALSE(construction_baseline(10, std::vector<std::string>{"k122"}).has_value());
  CHECK_FALSE(construction_baseline(8, std::vector<std::string>{"suspension:complete-bipartite:1,3"}).has_value());
}
