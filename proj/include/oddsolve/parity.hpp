#pragma once

// Polynomial-time parity algorithms built on GF(2) elimination.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "oddsolve/graph.hpp"

namespace oddsolve {

/// Per-vertex color in {0,1} plus the per-edge monochromatic indicator;
/// edge_mono[i] refers to edges[i], and edge_mono = 1 exactly when both
/// endpoints share a color.
struct TwoColoring {
  std::vector<std::uint8_t> color;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> edge_mono;

  VertexSet color_class(std::size_t n, std::uint8_t c) const;
};

/// Arcs as (tail, head); an arc contributes to the head's in-degree.
struct Orientation {
  std::vector<Edge> arcs;

  std::vector<std::size_t> in_degrees(std::size_t n) const;
};

struct OrientationFailure {
  VertexSet component;  ///< a component with |V_c| + |E_c| odd
};

/// Partition into q (possibly empty) classes, each inducing an odd subgraph.
struct OddColoring {
  std::vector<std::uint32_t> color;
  std::uint32_t q = 0;

  std::vector<VertexSet> classes() const;
};

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

/// Raised when a system that is always solvable comes back
/// infeasible.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Both classes induce odd subgraphs (empty allowed), or nullopt when the
/// vertex/edge system has no solution.
std::optional<TwoColoring> odd_two_coloring(const Graph& g);
/// Both classes induce even subgraphs. Always exists.
TwoColoring even_two_coloring(const Graph& g);

/// G[a] odd, G[b] even.
Bipartition gallai_odd_even(const Graph& g);
/// G[a] and G[b] both even.
Bipartition gallai_even_even(const Graph& g);

/// Orientation with every in-degree odd, or the first component whose
/// vertex count plus edge count is odd.
std::variant<Orientation, OrientationFailure> odd_orientation(const Graph& g);

struct JoinBound {
  int case_id = 0;                  ///< 1, 2 or 3
  VertexSet odd_subgraph;           ///< size >= 2*ceil((n-2)/4)
  std::vector<VertexSet> classes;   ///< the three color classes, some possibly empty
  std::optional<OddColoring> coloring;  ///< present when n is even
};

/// Lower-bound construction for graphs with a join (v1, v2). Throws
/// std::invalid_argument when (v1, v2) is not a join of g.
JoinBound join_bound_subgraph(const Graph& g, const VertexSet& v1, const VertexSet& v2);

/// Guaranteed size of join_bound_subgraph's output on n vertices.
std::size_t join_bound_value(std::size_t n);

struct CotreeNode {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  VertexSet vertices;
  std::vector<CotreeNode> children;
};

/// Recursive decomposition by connectivity of G and of its complement;
/// nullopt when some induced subgraph is connected with connected complement.
std::optional<CotreeNode> build_cotree(const Graph& g);

/// Splits V into (first co-component, rest) when the complement of g is
/// disconnected.
std::optional<std::pair<VertexSet, VertexSet>> find_join(const Graph& g);

struct NotCograph {};
struct OddComponent {
  VertexSet component;
};

std::variant<OddColoring, NotCograph, OddComponent> cograph_odd_3_coloring(const Graph& g);

}  // namespace oddsolve
