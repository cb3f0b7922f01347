#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddsolve/gf2.hpp"
#include "oddsolve/graph.hpp"

namespace oddsolve {

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rooted full binary tree whose leaves are in bijection with the vertices
/// of a graph. Node w defines the cut (V_w, V \ V_w).
class DecompositionTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t left = npos;
    std::size_t right = npos;
    std::size_t parent = npos;
    Vertex vertex = npos;  ///< set on leaves only
    bool is_leaf() const { return left == npos; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  DecompositionTree() = default;

  /// Validates arity, parent links, reachability and the leaf bijection onto
  /// 0..num_vertices-1; throws TreeError otherwise.
  DecompositionTree(std::vector<Node> nodes, std::size_t root, std::size_t num_vertices);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t root() const { return root_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t leaf_of(Vertex v) const { return leaf_of_[v]; }

  /// Children before parents.
  std::vector<std::size_t> postorder() const;
  /// V_w for every node, indexed like nodes().
  std::vector<VertexSet> vertex_sets() const;

  friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = npos;
  std::size_t num_vertices_ = 0;
  std::vector<std::size_t> leaf_of_;
};

/// GF(2) data for one cut (A, V \ A): the |A| x |V \ A| adjacency matrix,
/// a row basis drawn from A's own rows and one drawn from the complement's
/// rows of the transpose.
struct CutBasis {
  VertexSet side_set;
  std::vector<Vertex> side;   ///< A, ascending; row i of matrix is side[i]
  std::vector<Vertex> other;  ///< V \ A, ascending; column j of matrix is other[j]
  gf2::Matrix matrix;
  gf2::Matrix transposed;
  gf2::RrefDecomposition side_basis;
  gf2::RrefDecomposition other_basis;
  std::vector<Vertex> side_basis_vertices;
  std::vector<Vertex> other_basis_vertices;
  /// Index of each vertex inside `side` or `other`, whichever holds it.
  std::vector<std::size_t> position;

  std::size_t rank() const { return side_basis.rank(); }
};

CutBasis cut_basis(const Graph& g, const VertexSet& a);

/// Representative code of x ⊆ A: coordinates of N₂(x) \ A over the side
/// basis, bit i standing for side_basis_vertices[i]. Equal codes mean equal
/// odd neighborhoods across the cut. Throws above rank 64.
std::uint64_t side_code(const Graph& g, const CutBasis& cb, const VertexSet& x);
/// Same for y ⊆ V \ A over the other basis.
std::uint64_t other_code(const Graph& g, const CutBasis& cb, const VertexSet& y);
/// Subset of side_basis_vertices (resp. other_basis_vertices) picked by a code.
VertexSet side_representative(const CutBasis& cb, std::uint64_t code, std::size_t n);
VertexSet other_representative(const CutBasis& cb, std::uint64_t code, std::size_t n);
std::size_t cut_rank(const Graph& g, const VertexSet& a);

/// Throws TreeError if t does not fit g.
void check_tree_fits(const Graph& g, const DecompositionTree& t);
std::size_t width(const Graph& g, const DecompositionTree& t);

/// Left comb whose leaves follow `order`. Throws std::invalid_argument if
/// order is not a permutation of 0..n-1.
DecompositionTree caterpillar(std::size_t n, std::span<const Vertex> order);

enum class OrderMethod { Bfs, Degree };

/// Bfs: per component (by smallest vertex), BFS from a maximum-degree root,
/// neighbors in index order. Degree: descending degree. Ties go to the
/// smaller index.
std::vector<Vertex> heuristic_order(const Graph& g, OrderMethod method);
std::vector<Vertex> bfs_order_from(const Graph& g, Vertex root);

/// Maximum prefix cut-rank of a vertex order.
std::size_t linear_width(const Graph& g, std::span<const Vertex> order);

constexpr std::size_t kOptimalLinearMaxVertices = 20;

/// Vertex order minimising the maximum prefix cut-rank (subset DP over 2^n
/// states). Throws std::invalid_argument above kOptimalLinearMaxVertices.
std::vector<Vertex> optimal_linear_order(const Graph& g);
DecompositionTree optimal_linear(const Graph& g);

/// Lines `leaf <id> <vertex>`, `node <id> <left> <right>`, `root <id>`;
/// vertices 1-indexed. Node i of the result is the i-th defined id.
DecompositionTree parse_tree(std::string_view text);
std::string write_tree(const DecompositionTree& t);

}  // namespace oddsolve
