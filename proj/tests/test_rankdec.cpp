#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oddsolve/gf2.hpp"
#include "oddsolve/rankdec.hpp"

using namespace oddsolve;

namespace {

// Rank of the explicit |A| x |V \ A| matrix.
std::size_t naive_cut_rank(const Graph& g, const VertexSet& a) {
  const auto rows = a.members();
  const auto cols = a.complement().members();
  gf2::Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (g.adjacent(rows[i], cols[j])) m.set(i, j);
  return gf2::rank(m);
}

std::size_t brute_linear_width(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = g.order();
  do {
    best = std::min(best, linear_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

TEST_CASE("cut rank examples") {
  // Complete bipartite cut.
  const Graph kb = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(cut_rank(kb, VertexSet::from_members(5, {0, 1})) == 1);
  // Perfect matching across the cut.
  const Graph pm = Graph::from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(cut_rank(pm, VertexSet::from_members(6, {0, 1, 2})) == 3);
  const Graph p = gen_family("path", 8);
  for (std::size_t k = 1; k < 8; ++k) {
    VertexSet a(8);
    for (Vertex v = 0; v < k; ++v) a.set(v);
    CHECK(cut_rank(p, a) == 1);
  }
  CHECK(cut_rank(p, p.empty_set()) == 0);
  CHECK(cut_rank(p, p.all_vertices()) == 0);
}

TEST_CASE("cut rank matches the explicit matrix and is symmetric") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = testing::uniform(rng, 1, 30);
    const Graph g = testing::random_graph(n, rng);
    VertexSet a(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1U) a.set(v);
    const CutBasis cb = cut_basis(g, a);
    CHECK(cb.rank() == naive_cut_rank(g, a));
    CHECK(cut_rank(g, a) == cut_rank(g, a.complement()));
    CHECK(cb.side_basis.rank() == cb.other_basis.rank());
    CHECK(cb.rank() <= std::min(a.count(), n - a.count()));
  }
}

TEST_CASE("codes identify odd-neighborhood classes") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = testing::uniform(rng, 2, 16);
    const Graph g = testing::random_graph(n, rng);
    VertexSet a(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1U) a.set(v);
    const CutBasis cb = cut_basis(g, a);
    const VertexSet outside = a.complement();
    for (int k = 0; k < 20; ++k) {
      VertexSet x(n), y(n);
      a.for_each([&](std::size_t v) {
        if (rng() & 1U) x.set(v);
        if (rng() & 1U) y.set(v);
      });
      const bool same = (g.n2_neighborhood(x) & outside) == (g.n2_neighborhood(y) & outside);
      CHECK((side_code(g, cb, x) == side_code(g, cb, y)) == same);
      const VertexSet rep = side_representative(cb, side_code(g, cb, x), n);
      CHECK((g.n2_neighborhood(rep) & outside) == (g.n2_neighborhood(x) & outside));
    }
  }
}

TEST_CASE("width examples") {
  const Graph k2 = gen_family("clique", 2);
  CHECK(width(k2, caterpillar(2, identity(2))) <= 1);
  CHECK(width(gen_family("path", 8), caterpillar(8, identity(8))) == 1);
  CHECK(width(gen_family("path", 5), caterpillar(5, identity(5))) == 1);
  CHECK(width(gen_family("clique", 5), caterpillar(5, std::vector<Vertex>{3, 1, 4, 0, 2})) == 1);
  CHECK(width(gen_family("star", 5), caterpillar(5, identity(5))) == 1);
  const Graph k222 = gen_family("k222", 0);
  std::vector<Vertex> order = identity(6);
  do {
    CHECK(width(k222, caterpillar(6, order)) <= 3);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("width of a tree is the largest node cut rank") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = testing::uniform(rng, 1, 14);
    const Graph g = testing::random_graph(n, rng);
    const DecompositionTree t = testing::random_tree(n, rng);
    std::size_t w = 0;
    for (const VertexSet& s : t.vertex_sets()) w = std::max(w, naive_cut_rank(g, s));
    CHECK(width(g, t) == w);
    if (g.edge_count() > 0) CHECK(width(g, t) >= 1);
  }
}

TEST_CASE("caterpillar width is the max prefix cut rank") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = testing::uniform(rng, 1, 14);
    const Graph g = testing::random_graph(n, rng);
    std::vector<Vertex> order = identity(n);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t w = 0;
    VertexSet prefix(n);
    for (Vertex v : order) {
      prefix.set(v);
      w = std::max(w, naive_cut_rank(g, prefix));
    }
    CHECK(width(g, caterpillar(n, order)) == w);
    CHECK(linear_width(g, order) == w);
  }
  CHECK_THROWS_AS(caterpillar(3, std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("optimal linear width matches exhaustive order search") {
  CHECK(width(gen_family("path", 6), optimal_linear(gen_family("path", 6))) == 1);
  const Graph c6 = gen_family("cycle", 6);
  const std::size_t w6 = width(c6, optimal_linear(c6));
  CHECK(w6 == brute_linear_width(c6));
  CHECK(w6 >= 1);
  CHECK(w6 <= 2);
  CHECK(width(gen_family("clique", 4), optimal_linear(gen_family("clique", 4))) == 1);

  std::mt19937_64 rng(45);
  for (int it = 0; it < 60; ++it) {
    const Graph g = testing::random_graph(testing::uniform(rng, 1, 6), rng);
    CHECK(width(g, optimal_linear(g)) == brute_linear_width(g));
  }
  CHECK_THROWS_AS(optimal_linear(Graph(kOptimalLinearMaxVertices + 1)), std::invalid_argument);
}

TEST_CASE("heuristic orders") {
  const Graph p4 = gen_family("path", 4);
  CHECK(bfs_order_from(p4, 0) == std::vector<Vertex>{0, 1, 2, 3});
  const Graph star = gen_family("star", 5);
  CHECK(heuristic_order(star, OrderMethod::Degree).front() == 0);
  CHECK(heuristic_order(star, OrderMethod::Bfs).front() == 0);
  const Graph two = Graph::from_edges(5, {{3, 4}, {0, 1}});
  const auto o = heuristic_order(two, OrderMethod::Bfs);
  CHECK(o == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("tree text format") {
  const DecompositionTree k2 = caterpillar(2, identity(2));
  CHECK(parse_tree(write_tree(k2)) == k2);
  const DecompositionTree p4 = caterpillar(4, identity(4));
  CHECK(parse_tree(write_tree(p4)) == p4);
  std::mt19937_64 rng(46);
  for (int it = 0; it < 50; ++it) {
    const auto t = testing::random_tree(testing::uniform(rng, 1, 20), rng);
    CHECK(parse_tree(write_tree(t)) == t);
  }

  auto message = [](const std::string& text) {
    try {
      parse_tree(text);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("leaf 0 1\nleaf 1 2\nleaf 2 3\nnode 3 0 1 2\nroot 3\n").find("not full binary") != std::string::npos);
  CHECK(message("leaf 0 1\nleaf 1 1\nnode 2 0 1\nroot 2\n").find("duplicate") != std::string::npos);
  CHECK(message("leaf 0 1\nleaf 1 2\nnode 2 0 1\n").find("missing root") != std::string::npos);
  CHECK_FALSE(message("leaf 0 1\nleaf 1 2\nnode 2 0 7\nroot 2\n").empty());
}

TEST_CASE("check_tree_fits rejects a tree for another graph") {
  const DecompositionTree t = caterpillar(3, identity(3));
  CHECK_THROWS_AS(check_tree_fits(Graph(4), t), TreeError);
  CHECK_NOTHROW(check_tree_fits(Graph(3), t));
}
