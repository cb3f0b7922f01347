#pragma once

// Linear-time certificate checkers. Each returns the first vertex violating
// the property, or nullopt when the certificate is valid. They only count
// degrees and never call into the solvers.

#include <cstdint>
#include <optional>
#include <vector>

#include "oddsolve/graph.hpp"

namespace oddsolve {

/// Every member of s has odd degree in G[s].
std::optional<Vertex> odd_set_violation(const Graph& g, const VertexSet& s);
/// Every member of s has even degree in G[s].
std::optional<Vertex> even_set_violation(const Graph& g, const VertexSet& s);
/// Every vertex outside s has an odd number of neighbors in s.
std::optional<Vertex> odd_ds_violation(const Graph& g, const VertexSet& s);
/// Every vertex has an odd number of neighbors in s.
std::optional<Vertex> odd_tds_violation(const Graph& g, const VertexSet& s);
/// color.size() == n and every vertex has odd degree inside its own class.
/// Vertices with an out-of-range color are reported too.
std::optional<Vertex> odd_coloring_violation(const Graph& g, const std::vector<std::uint32_t>& color,
                                             std::uint32_t q);

inline bool is_odd_set(const Graph& g, const VertexSet& s) { return !odd_set_violation(g, s); }
inline bool is_even_set(const Graph& g, const VertexSet& s) { return !even_set_violation(g, s); }

}  // namespace oddsolve
