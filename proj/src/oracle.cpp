#include "oddsolve/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace oddsolve {

namespace {

void require(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap)
    throw OracleLimitError(std::string(what) + " oracle supports at most " + std::to_string(cap) + " vertices");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) g.neighbors(v).for_each([&](std::size_t w) { adj[v] |= 1U << w; });
  return adj;
}

bool satisfies(SetProblem p, const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const bool in = ((s >> v) & 1U) != 0;
    const bool parity = (std::popcount(adj[v] & s) & 1) != 0;
    if (!vertex_condition(p, in, parity)) return false;
  }
  return true;
}

// Visits the k-subsets of {0..n-1} in lexicographic order of their sorted
// member lists; stops when f returns true.
template <typename F>
bool for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= 1U << i;
    if (f(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SetResult oracle_set_problem(SetProblem p, const Graph& g) {
  const bool big = maximizes(p);
  require(g, big ? kOracleSubgraphMax : kOracleDominationMax, big ? "subgraph" : "domination");
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  SetResult res;
  for (std::size_t step = 0; step <= n; ++step) {
    const std::size_t k = big ? n - step : step;
    std::uint32_t hit = 0;
    if (for_each_subset_of_size(n, k, [&](std::uint32_t s) {
          if (!satisfies(p, adj, s)) return false;
          hit = s;
          return true;
        })) {
      res.feasible = true;
      res.value = k;
      res.set = g.empty_set();
      for (std::size_t v = 0; v < n; ++v)
        if ((hit >> v) & 1U) res.set.set(v);
      return res;
    }
  }
  return res;
}

namespace {

// Plain backtracking in vertex order. A vertex is checked once the highest
// index among itself and its neighbors has been colored.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t q, bool odd) : g_(g), q_(q), odd_(odd), color_(g.order(), 0) {
    const std::size_t n = g.order();
    check_at_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      std::size_t last = v;
      g.neighbors(v).for_each([&](std::size_t w) { last = std::max(last, w); });
      check_at_[last].push_back(v);
    }
  }

  bool run() { return place(0, 0); }
  const std::vector<std::uint32_t>& color() const { return color_; }

 private:
  bool ok(Vertex v) const {
    if (odd_) {
      std::size_t same = 0;
      g_.neighbors(v).for_each([&](std::size_t w) { same += color_[w] == color_[v] ? 1 : 0; });
      return same % 2 == 1;
    }
    bool clash = false;
    g_.neighbors(v).for_each([&](std::size_t w) { clash = clash || (w < v && color_[w] == color_[v]); });
    return !clash;
  }

  bool place(Vertex v, std::uint32_t used) {
    if (v == g_.order()) return true;
    const std::uint32_t limit = static_cast<std::uint32_t>(std::min<std::size_t>(q_, used + 1));
    for (std::uint32_t c = 0; c < limit; ++c) {
      color_[v] = c;
      bool good = true;
      if (odd_) {
        for (Vertex u : check_at_[v]) good = good && ok(u);
      } else {
        good = ok(v);
      }
      if (good && place(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t q_;
  bool odd_;
  std::vector<std::uint32_t> color_;
  std::vector<std::vector<Vertex>> check_at_;
};

}  // namespace

std::optional<OddColoring> oracle_odd_qcol(const Graph& g, std::size_t q) {
  require(g, kOracleColoringMax, "odd coloring");
  if (g.order() == 0) return OddColoring{};
  ColoringSearch s(g, q, true);
  if (!s.run()) return std::nullopt;
  OddColoring c;
  c.color = s.color();
  c.q = c.color.empty() ? 0 : *std::max_element(c.color.begin(), c.color.end()) + 1;
  return c;
}

OracleChi oracle_chi_odd(const Graph& g, std::size_t q_max) {
  require(g, kOracleChiMax, "odd chromatic number");
  OracleChi out;
  for (const VertexSet& comp : g.components())
    if (comp.count() % 2 == 1) return out;
  for (std::size_t q = 0; q <= q_max; ++q) {
    if (q == 0 && g.order() != 0) continue;
    if (auto c = oracle_odd_qcol(g, q)) {
      out.status = OracleChi::Status::Value;
      out.value = q;
      out.coloring = std::move(*c);
      return out;
    }
  }
  out.status = OracleChi::Status::AboveLimit;
  return out;
}

std::optional<std::vector<std::uint32_t>> oracle_proper_coloring(const Graph& g, std::size_t q) {
  require(g, kOracleColoringMax, "proper coloring");
  if (g.order() == 0) return std::vector<std::uint32_t>{};
  ColoringSearch s(g, q, false);
  if (!s.run()) return std::nullopt;
  return s.color();
}

int oracle_treewidth(const Graph& g) {
  require(g, kOracleTreewidthMax, "tree-width");
  const std::size_t n = g.order();
  if (n == 0) return -1;
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = (n == 32) ? ~0U : (1U << n) - 1;
  // q_size(s, v): vertices outside s ∪ {v} reachable from v through s.
  auto q_size = [&](std::uint32_t s, std::size_t v) {
    std::uint32_t seen = 1U << v;
    std::uint32_t frontier = 1U << v;
    std::uint32_t reach = 0;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~seen;
      seen |= next;
      reach |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(reach & all);
  };
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  tw[0] = std::numeric_limits<int>::min();
  for (std::uint32_t s = 1; s <= all; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(1U << v);
      best = std::min(best, std::max(tw[prev], q_size(prev, static_cast<std::size_t>(v))));
    }
    tw[s] = best;
    if (s == all) break;
  }
  return tw[all];
}

}  // namespace oddsolve
