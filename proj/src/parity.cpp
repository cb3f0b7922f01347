#include "oddsolve/parity.hpp"

#include <algorithm>
#include <deque>

#include "oddsolve/gf2.hpp"

namespace oddsolve {

VertexSet TwoColoring::color_class(std::size_t n, std::uint8_t c) const {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (color[v] == c) s.set(v);
  return s;
}

std::vector<std::size_t> Orientation::in_degrees(std::size_t n) const {
  std::vector<std::size_t> in(n, 0);
  for (const Edge& a : arcs) ++in[a.v];
  return in;
}

std::vector<VertexSet> OddColoring::classes() const {
  std::vector<VertexSet> out(q, VertexSet(color.size()));
  for (Vertex v = 0; v < color.size(); ++v) out[color[v]].set(v);
  return out;
}

namespace {

// Variables: x_0..x_{n-1} for vertex colors, then one x_e per edge.
//   x_i + x_j + x_e = 1            for every edge e = ij
//   sum_{e incident to i} x_e = t  for every vertex i
// With t = 1 each color class induces an odd subgraph, with t = 0 an even one.
std::optional<TwoColoring> parity_two_coloring(const Graph& g, bool odd) {
  const std::size_t n = g.order();
  TwoColoring out;
  out.edges = g.edges();
  const std::size_t m = out.edges.size();
  gf2::Matrix a(m + n, n + m);
  BitVec b(m + n);
  for (std::size_t e = 0; e < m; ++e) {
    a.set(e, out.edges[e].u);
    a.set(e, out.edges[e].v);
    a.set(e, n + e);
    b.set(e);
  }
  for (std::size_t e = 0; e < m; ++e) {
    a.set(m + out.edges[e].u, n + e);
    a.set(m + out.edges[e].v, n + e);
  }
  if (odd)
    for (Vertex v = 0; v < n; ++v) b.set(m + v);
  const auto x = gf2::solve(a, b);
  if (!x) return std::nullopt;
  out.color.resize(n);
  out.edge_mono.resize(m);
  for (Vertex v = 0; v < n; ++v) out.color[v] = x->test(v) ? 1 : 0;
  for (std::size_t e = 0; e < m; ++e) out.edge_mono[e] = x->test(n + e) ? 1 : 0;
  return out;
}

// x_v = 1 puts v in class a. Row v reads
//   sum_{u in N(v)} x_u + x_v * c_v = deg(v)   (mod 2)
// where c_v = deg(v) for even/even and c_v = 1 + deg(v) for odd/even.
Bipartition gallai(const Graph& g, bool a_odd) {
  const std::size_t n = g.order();
  gf2::Matrix a(n, n);
  BitVec b(n);
  for (Vertex v = 0; v < n; ++v) {
    a.row(v) = g.neighbors(v);
    const bool deg_odd = (g.degree(v) & 1U) != 0;
    a.set(v, v, a_odd ? !deg_odd : deg_odd);
    b.set(v, deg_odd);
  }
  const auto x = gf2::solve(a, b);
  if (!x) throw InternalError("Gallai system reported infeasible");
  Bipartition out{*x, x->complement()};
  return out;
}

}  // namespace

std::optional<TwoColoring> odd_two_coloring(const Graph& g) { return parity_two_coloring(g, true); }

TwoColoring even_two_coloring(const Graph& g) {
  auto c = parity_two_coloring(g, false);
  if (!c) throw InternalError("even 2-coloring system reported infeasible");
  return std::move(*c);
}

Bipartition gallai_odd_even(const Graph& g) { return gallai(g, true); }
Bipartition gallai_even_even(const Graph& g) { return gallai(g, false); }

std::variant<Orientation, OrientationFailure> odd_orientation(const Graph& g) {
  const std::size_t n = g.order();
  for (const VertexSet& comp : g.components()) {
    std::size_t twice_edges = 0;
    comp.for_each([&](std::size_t v) { twice_edges += g.degree(v); });
    if ((comp.count() + twice_edges / 2) % 2 != 0) return OrientationFailure{comp};
  }

  const std::vector<Edge> edges = g.edges();
  std::vector<std::size_t> parent(n, BitVec::npos);
  std::vector<Vertex> bfs_order;
  bfs_order.reserve(n);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      bfs_order.push_back(v);
      g.neighbors(v).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          queue.push_back(w);
        }
      });
    }
  }

  // Non-tree edges point at their larger endpoint; tree edges are then fixed
  // from the leaves up so every non-root vertex gets odd in-degree.
  std::vector<std::size_t> in(n, 0);
  std::vector<int> head_of(edges.size(), -1);
  std::vector<std::size_t> tree_edge(n, BitVec::npos);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (parent[v] == u)
      tree_edge[v] = e;
    else if (parent[u] == v)
      tree_edge[u] = e;
    else {
      head_of[e] = static_cast<int>(v);
      ++in[v];
    }
  }
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    const Vertex c = *it;
    if (parent[c] == BitVec::npos) continue;
    const Vertex head = (in[c] % 2 == 0) ? c : parent[c];
    head_of[tree_edge[c]] = static_cast<int>(head);
    ++in[head];
  }
  Orientation out;
  out.arcs.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Vertex head = static_cast<Vertex>(head_of[e]);
    out.arcs.push_back({edges[e].u == head ? edges[e].v : edges[e].u, head});
  }
  return out;
}

std::size_t join_bound_value(std::size_t n) {
  if (n < 2) return 0;
  return 2 * ((n - 2 + 3) / 4);
}

namespace {

VertexSet lift(const VertexSet& local, const std::vector<std::size_t>& members, std::size_t n) {
  VertexSet out(n);
  local.for_each([&](std::size_t i) { out.set(members[i]); });
  return out;
}

// Case 1 core: |w1| and |w2| odd. Returns (class of even parts, class of odd parts).
std::pair<VertexSet, VertexSet> odd_sides_join(const Graph& g, const VertexSet& w1, const VertexSet& w2) {
  const std::size_t n = g.order();
  const Bipartition p1 = gallai_odd_even(g.induced(w1));
  const Bipartition p2 = gallai_odd_even(g.induced(w2));
  const auto m1 = w1.members();
  const auto m2 = w2.members();
  VertexSet evens = lift(p1.b, m1, n) | lift(p2.b, m2, n);
  VertexSet odds = lift(p1.a, m1, n) | lift(p2.a, m2, n);
  return {std::move(evens), std::move(odds)};
}

OddColoring compact(std::size_t n, const std::vector<VertexSet>& classes) {
  OddColoring c;
  c.color.assign(n, 0);
  for (const VertexSet& cls : classes) {
    if (cls.none()) continue;
    cls.for_each([&](std::size_t v) { c.color[v] = c.q; });
    ++c.q;
  }
  return c;
}

}  // namespace

JoinBound join_bound_subgraph(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  const std::size_t n = g.order();
  if (v1.size() != n || v2.size() != n) throw std::invalid_argument("join sides have wrong width");
  if (v1.none() || v2.none()) throw std::invalid_argument("join sides must be non-empty");
  if ((v1 & v2).any() || (v1 | v2) != g.all_vertices())
    throw std::invalid_argument("join sides must partition the vertex set");
  for (std::size_t u = v1.first(); u != BitVec::npos; u = v1.next(u + 1))
    if ((g.neighbors(u) & v2) != v2)
      throw std::invalid_argument("not a join: vertex " + std::to_string(u + 1) +
                                  " misses a neighbor on the other side");

  JoinBound out;
  VertexSet w1 = v1;
  VertexSet w2 = v2;
  VertexSet spare(n);
  const bool odd1 = v1.count() % 2 == 1;
  const bool odd2 = v2.count() % 2 == 1;
  if (n % 2 == 1) {
    out.case_id = 3;
    VertexSet& even_side = odd1 ? w2 : w1;
    even_side.reset(even_side.first());
  } else if (!odd1 && !odd2) {
    out.case_id = 2;
    spare.set(w1.first());
    spare.set(w2.first());
    w1.reset(w1.first());
    w2.reset(w2.first());
  } else {
    out.case_id = 1;
  }
  auto [evens, odds] = odd_sides_join(g, w1, w2);
  out.odd_subgraph = evens.count() >= odds.count() ? evens : odds;
  out.classes = {std::move(evens), std::move(odds), std::move(spare)};
  if (out.case_id != 3) out.coloring = compact(n, out.classes);
  return out;
}

namespace {

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining.any()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(remaining.first());
    remaining.reset(remaining.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](std::size_t v) {
        VertexSet non_nbrs = remaining;
        non_nbrs.subtract(g.neighbors(v));
        next |= non_nbrs;
      });
      remaining.subtract(next);
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<CotreeNode> cotree_of(const Graph& g, const VertexSet& s) {
  CotreeNode node;
  node.vertices = s;
  if (s.count() == 1) return node;
  auto parts = g.components(s);
  node.kind = CotreeNode::Kind::Union;
  if (parts.size() == 1) {
    parts = co_components(g, s);
    node.kind = CotreeNode::Kind::Join;
    if (parts.size() == 1) return std::nullopt;
  }
  for (const VertexSet& p : parts) {
    auto child = cotree_of(g, p);
    if (!child) return std::nullopt;
    node.children.push_back(std::move(*child));
  }
  return node;
}

}  // namespace

std::optional<CotreeNode> build_cotree(const Graph& g) {
  if (g.order() == 0) return CotreeNode{CotreeNode::Kind::Union, g.empty_set(), {}};
  return cotree_of(g, g.all_vertices());
}

std::optional<std::pair<VertexSet, VertexSet>> find_join(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  auto parts = co_components(g, g.all_vertices());
  if (parts.size() < 2) return std::nullopt;
  VertexSet rest = parts.front().complement();
  return std::make_pair(std::move(parts.front()), std::move(rest));
}

std::variant<OddColoring, NotCograph, OddComponent> cograph_odd_3_coloring(const Graph& g) {
  const std::size_t n = g.order();
  if (!build_cotree(g)) return NotCograph{};
  const auto comps = g.components();
  for (const VertexSet& c : comps)
    if (c.count() % 2 == 1) return OddComponent{c};

  std::vector<VertexSet> palette(3, g.empty_set());
  for (const VertexSet& c : comps) {
    const auto members = c.members();
    const Graph h = g.induced(c);
    auto join = find_join(h);
    if (!join) throw InternalError("connected cograph component without a join");
    const JoinBound jb = join_bound_subgraph(h, join->first, join->second);
    for (std::size_t k = 0; k < 3; ++k) palette[k] |= lift(jb.classes[k], members, n);
  }
  return compact(n, palette);
}

}  // namespace oddsolve
