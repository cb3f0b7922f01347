#include "corpus.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <numeric>

#include <unistd.h>

#include "oddsolve/reductions.hpp"

namespace oddsolve::testing {

namespace {

using Signature = std::vector<std::size_t>;

// Per-vertex invariant: degree, triangles through v, then sorted neighbor
// degrees.
std::vector<Signature> vertex_signatures(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Signature> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t tri = 0;
    std::vector<std::size_t> nd;
    g.neighbors(v).for_each([&](std::size_t w) {
      nd.push_back(g.degree(w));
      tri += g.neighbors(v).and_count(g.neighbors(w));
    });
    std::sort(nd.begin(), nd.end());
    sig[v] = {g.degree(v), tri / 2};
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

std::vector<Signature> graph_key(const Graph& g) {
  auto sig = vertex_signatures(g);
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool extend(const Graph& a, const Graph& b, const std::vector<Signature>& sa, const std::vector<Signature>& sb,
            std::vector<Vertex>& map, std::vector<bool>& used, Vertex v) {
  if (v == a.order()) return true;
  for (Vertex w = 0; w < b.order(); ++w) {
    if (used[w] || sa[v] != sb[w]) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(a, b, sa, sb, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto sa = vertex_signatures(a);
  const auto sb = vertex_signatures(b);
  auto ka = sa, kb = sb;
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  std::vector<Vertex> map(a.order());
  std::vector<bool> used(b.order(), false);
  return extend(a, b, sa, sb, map, used, 0);
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  if (n > 8) throw std::invalid_argument("nonisomorphic_graphs supports n <= 8");
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::pair<std::size_t, std::vector<Signature>>, std::vector<std::size_t>> buckets;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      const std::vector<Edge> base = h.edges();
      for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex u = 0; u + 1 < k; ++u)
          if ((mask >> u) & 1U) edges.push_back({u, k - 1});
        Graph g = Graph::from_edges(k, edges);
        auto& bucket = buckets[{g.edge_count(), graph_key(g)}];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t i) { return is_isomorphic(next[i], g); });
        if (seen) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

bool is_connected(const Graph& g) { return g.components().size() <= 1; }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  const std::uint64_t num = uniform(rng, 1, 9);
  return oddsolve::random_graph(n, num, 10, rng());
}

DecompositionTree random_tree(std::size_t n, std::mt19937_64& rng) {
  using Node = DecompositionTree::Node;
  if (n == 0) return DecompositionTree({}, DecompositionTree::npos, 0);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform(rng, 0, i - 1)]);
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i].vertex = perm[i];
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  while (pool.size() > 1) {
    const std::size_t i = uniform(rng, 0, pool.size() - 1);
    std::swap(pool[i], pool.back());
    const std::size_t a = pool.back();
    pool.pop_back();
    const std::size_t j = uniform(rng, 0, pool.size() - 1);
    std::swap(pool[j], pool.back());
    const std::size_t b = pool.back();
    pool.pop_back();
    Node parent;
    parent.left = a;
    parent.right = b;
    nodes[a].parent = nodes.size();
    nodes[b].parent = nodes.size();
    pool.push_back(nodes.size());
    nodes.push_back(parent);
  }
  const std::size_t root = pool.front();
  return DecompositionTree(std::move(nodes), root, n);
}

Graph random_even_graph(std::size_t n, std::mt19937_64& rng) {
  if (n % 2 != 0) throw std::invalid_argument("random_even_graph needs even n");
  while (true) {
    Graph g = random_graph(n, rng);
    const auto comps = g.components();
    if (std::all_of(comps.begin(), comps.end(), [](const VertexSet& c) { return c.count() % 2 == 0; })) return g;
  }
}

JoinInstance random_join(std::size_t n1, std::size_t n2, std::mt19937_64& rng) {
  const Graph a = random_graph(n1, rng);
  const Graph b = random_graph(n2, rng);
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) edges.push_back({u, n1 + v});
  JoinInstance out;
  out.graph = Graph::from_edges(n1 + n2, edges);
  out.v1 = out.graph.empty_set();
  out.v2 = out.graph.empty_set();
  for (Vertex u = 0; u < n1; ++u) out.v1.set(u);
  for (Vertex v = 0; v < n2; ++v) out.v2.set(n1 + v);
  return out;
}

std::string temp_path(const std::string& stem) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path();
  return (dir / ("oddsolve_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + stem)).string();
}

}  // namespace oddsolve::testing
