#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddsolve/bitvec.hpp"

namespace oddsolve {

using Vertex = std::size_t;

/// Characteristic vector of a vertex subset; its width is the host graph's order.
using VertexSet = BitVec;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency rows are kept as
/// GF(2) vectors so neighborhood sums are word-parallel XORs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, BitVec(n)) {}

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return m_; }

  /// Returns false if the edge was already present. Self-loops and
  /// out-of-range endpoints throw.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const BitVec& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  std::size_t max_degree() const;

  /// Edges with u < v, ascending.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbor_list(Vertex v) const { return adj_[v].members(); }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  /// N₂(X): XOR of the adjacency rows of X's members.
  VertexSet n2_neighborhood(const VertexSet& x) const;

  /// |N(v) ∩ s| parity.
  bool odd_into(Vertex v, const VertexSet& s) const { return adj_[v].dot(s); }

  /// Induced subgraph on `keep`; vertex i of the result is the i-th member
  /// of `keep` in ascending order.
  Graph induced(const VertexSet& keep) const;
  Graph complement() const;

  /// Connected components of G[within], each as a vertex set, ordered by
  /// smallest member.
  std::vector<VertexSet> components(const VertexSet& within) const;
  std::vector<VertexSet> components() const { return components(all_vertices()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<BitVec> adj_;
  std::size_t m_ = 0;
};

/// `p edge n m` header followed by `e u v` lines (1-indexed). Duplicate edges
/// are collapsed and reported through `warnings` when given.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// Named graph families. `n` is the vertex count for path/cycle/clique/star
/// (star = K_{1,n-1}) and the clique order for kn-subdivided/hn-split; it is
/// ignored for k222 and c5plus.
Graph gen_family(std::string_view name, std::size_t n);
std::vector<std::string> family_names();

/// Subdivided clique: vertices 0..n-1 are the original ones, then one vertex
/// per pair i<j in lexicographic order.
Graph subdivided_clique(std::size_t n, bool keep_clique_edges);

}  // namespace oddsolve
