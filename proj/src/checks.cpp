#include "oddsolve/checks.hpp"

namespace oddsolve {

namespace {

template <typename Pred>
std::optional<Vertex> first_failing(std::size_t n, Pred&& ok) {
  for (Vertex v = 0; v < n; ++v)
    if (!ok(v)) return v;
  return std::nullopt;
}

}  // namespace

std::optional<Vertex> odd_set_violation(const Graph& g, const VertexSet& s) {
  return first_failing(g.order(), [&](Vertex v) { return !s.test(v) || g.odd_into(v, s); });
}

std::optional<Vertex> even_set_violation(const Graph& g, const VertexSet& s) {
  return first_failing(g.order(), [&](Vertex v) { return !s.test(v) || !g.odd_into(v, s); });
}

std::optional<Vertex> odd_ds_violation(const Graph& g, const VertexSet& s) {
  return first_failing(g.order(), [&](Vertex v) { return s.test(v) || g.odd_into(v, s); });
}

std::optional<Vertex> odd_tds_violation(const Graph& g, const VertexSet& s) {
  return first_failing(g.order(), [&](Vertex v) { return g.odd_into(v, s); });
}

std::optional<Vertex> odd_coloring_violation(const Graph& g, const std::vector<std::uint32_t>& color,
                                             std::uint32_t q) {
  if (color.size() != g.order()) return g.order() == 0 ? std::optional<Vertex>{} : Vertex{0};
  std::vector<VertexSet> classes(q, g.empty_set());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (color[v] >= q) return v;
    classes[color[v]].set(v);
  }
  return first_failing(g.order(), [&](Vertex v) { return g.odd_into(v, classes[color[v]]); });
}

}  // namespace oddsolve
