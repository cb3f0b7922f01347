#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oddsolve/checks.hpp"
#include "oddsolve/oracle.hpp"

using namespace oddsolve;

namespace {

// Every assignment in [q]^n, no symmetry breaking.
template <typename Ok>
bool any_assignment(std::size_t n, std::size_t q, Ok&& ok) {
  std::vector<std::uint32_t> c(n, 0);
  while (true) {
    if (ok(c)) return true;
    std::size_t i = 0;
    while (i < n && ++c[i] == q) c[i++] = 0;
    if (i == n) return false;
  }
}

bool naive_odd_qcol(const Graph& g, std::size_t q) {
  if (q == 0) return g.order() == 0;
  return any_assignment(g.order(), q, [&](const std::vector<std::uint32_t>& c) {
    return !odd_coloring_violation(g, c, static_cast<std::uint32_t>(q));
  });
}

bool naive_proper(const Graph& g, std::size_t q) {
  if (q == 0) return g.order() == 0;
  return any_assignment(g.order(), q, [&](const std::vector<std::uint32_t>& c) {
    for (const Edge& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    return true;
  });
}

// Tree-width as the best elimination order's largest neighborhood at
// elimination time.
int naive_treewidth(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return -1;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(n);
  do {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    std::vector<bool> gone(n, false);
    int w = 0;
    for (Vertex v : order) {
      std::vector<Vertex> nb;
      for (Vertex u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      w = std::max(w, static_cast<int>(nb.size()));
      for (Vertex a : nb)
        for (Vertex b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Graph with_isolated(const Graph& g) {
  return Graph::from_edges(g.order() + 1, g.edges());
}

}  // namespace

TEST_CASE("subgraph oracle examples") {
  CHECK(oracle_mos(gen_family("star", 4)).value == 4);
  CHECK(oracle_mos(gen_family("k222", 0)).value == 2);
  CHECK(oracle_mos(gen_family("c5plus", 0)).value == 2);
  const SetResult mes = oracle_mes(gen_family("clique", 2));
  CHECK(mes.value == 1);
  CHECK(mes.set == VertexSet::from_members(2, {0}));
}

TEST_CASE("domination oracle examples") {
  const Graph k2 = gen_family("clique", 2);
  CHECK(oracle_odd_ds(k2).value == 1);
  CHECK(oracle_odd_tds(k2).value == 2);
  const Graph e3(3);
  CHECK(oracle_odd_ds(e3).value == 3);
  CHECK_FALSE(oracle_odd_tds(e3).feasible);
  const SetResult c4 = oracle_odd_ds(gen_family("cycle", 4));
  CHECK(c4.feasible);
  CHECK(!odd_ds_violation(gen_family("cycle", 4), c4.set));
}

TEST_CASE("odd chromatic number oracle examples") {
  OracleChi r = oracle_chi_odd(gen_family("clique", 4), 4);
  CHECK(r.status == OracleChi::Status::Value);
  CHECK(r.value == 1);
  r = oracle_chi_odd(gen_family("kn-subdivided", 4), 4);
  CHECK(r.status == OracleChi::Status::Value);
  CHECK(r.value == 4);
  CHECK(oracle_chi_odd(gen_family("path", 3), 3).status == OracleChi::Status::Undefined);
  CHECK(oracle_chi_odd(gen_family("k222", 0), 2).status == OracleChi::Status::AboveLimit);
  CHECK(oracle_chi_odd(Graph(0), 0).value == 0);
}

TEST_CASE("witnesses pass the checkers and sizes are optimal among all subsets") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = testing::uniform(rng, 0, 9);
    const Graph g = testing::random_graph(n, rng);
    // Direct scan over all subsets, independent of the size-ordered search.
    std::size_t best_odd = 0, best_even = 0, best_ds = n + 1, best_tds = n + 1;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      VertexSet s(n);
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U) s.set(v);
      const std::size_t k = s.count();
      if (is_odd_set(g, s)) best_odd = std::max(best_odd, k);
      if (is_even_set(g, s)) best_even = std::max(best_even, k);
      if (!odd_ds_violation(g, s)) best_ds = std::min(best_ds, k);
      if (!odd_tds_violation(g, s)) best_tds = std::min(best_tds, k);
    }
    const SetResult mos = oracle_mos(g), mes = oracle_mes(g), ds = oracle_odd_ds(g), tds = oracle_odd_tds(g);
    CHECK(mos.value == best_odd);
    CHECK(is_odd_set(g, mos.set));
    CHECK(mes.value == best_even);
    CHECK(is_even_set(g, mes.set));
    CHECK(ds.feasible == (best_ds <= n));
    if (ds.feasible) {
      CHECK(ds.value == best_ds);
      CHECK_FALSE(odd_ds_violation(g, ds.set).has_value());
    }
    CHECK(tds.feasible == (best_tds <= n));
    if (tds.feasible) {
      CHECK(tds.value == best_tds);
      CHECK_FALSE(odd_tds_violation(g, tds.set).has_value());
    }
  }
}

TEST_CASE("coloring search agrees with plain enumeration of all assignments") {
  std::mt19937_64 rng(62);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = testing::uniform(rng, 0, 7);
    const Graph g = testing::random_graph(n, rng);
    for (std::size_t q = 1; q <= 3; ++q) {
      const auto odd = oracle_odd_qcol(g, q);
      CHECK(odd.has_value() == naive_odd_qcol(g, q));
      if (odd) CHECK_FALSE(odd_coloring_violation(g, odd->color, static_cast<std::uint32_t>(q)).has_value());
      const auto proper = oracle_proper_coloring(g, q);
      CHECK(proper.has_value() == naive_proper(g, q));
    }
  }
}

TEST_CASE("isolated vertices change values in the documented way") {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 100; ++it) {
    const Graph g = testing::random_graph(testing::uniform(rng, 0, 9), rng);
    const Graph h = with_isolated(g);
    CHECK(oracle_mos(h).value == oracle_mos(g).value);
    const SetResult a = oracle_odd_ds(g), b = oracle_odd_ds(h);
    CHECK(a.feasible == b.feasible);
    if (a.feasible) CHECK(b.value == a.value + 1);
  }
}

TEST_CASE("treewidth oracle") {
  CHECK(oracle_treewidth(Graph(0)) == -1);
  CHECK(oracle_treewidth(Graph(4)) == 0);
  CHECK(oracle_treewidth(gen_family("path", 6)) == 1);
  CHECK(oracle_treewidth(gen_family("cycle", 7)) == 2);
  CHECK(oracle_treewidth(gen_family("clique", 6)) == 5);
  CHECK(oracle_treewidth(gen_family("k222", 0)) == 4);
  std::mt19937_64 rng(64);
  for (int it = 0; it < 40; ++it) {
    const Graph g = testing::random_graph(testing::uniform(rng, 1, 7), rng);
    CHECK(oracle_treewidth(g) == naive_treewidth(g));
  }
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(oracle_mos(Graph(kOracleSubgraphMax + 1)), OracleLimitError);
  CHECK_THROWS_AS(oracle_odd_ds(Graph(kOracleDominationMax + 1)), OracleLimitError);
  CHECK_THROWS_AS(oracle_chi_odd(Graph(kOracleChiMax + 2), 2), OracleLimitError);
  CHECK_THROWS_AS(oracle_odd_qcol(Graph(kOracleColoringMax + 1), 2), OracleLimitError);
  CHECK_THROWS_AS(oracle_treewidth(Graph(kOracleTreewidthMax + 1)), OracleLimitError);
}
