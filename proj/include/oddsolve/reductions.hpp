#pragma once

// Instance generators for the hardness reductions, with forward witnesses.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddsolve/graph.hpp"
#include "oddsolve/parity.hpp"

namespace oddsolve {

/// CNF formula with DIMACS-style signed literals (+v / -v, 1-indexed).
struct Cnf23 {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool all_three_literals() const;
  /// No clause mentions a variable twice.
  bool distinct_variables() const;
  /// occurrences()[v-1] = number of clauses mentioning variable v.
  std::vector<std::size_t> occurrences() const;
  /// Three literals per clause over distinct variables, every variable in
  /// exactly three clauses, hence as many clauses as variables.
  bool is_2in3_sat3_shape() const;
};

/// Standard DIMACS cnf. With strict = true every clause must have exactly
/// three literals. Throws ParseError.
Cnf23 parse_cnf(std::string_view text, bool strict = false);
std::string write_cnf(const Cnf23& f, std::string_view comment = {});

/// Exactly two true literals in every clause. assignment[v-1] is variable v.
bool satisfies_2in3(const Cnf23& f, const std::vector<bool>& assignment);

struct PlantedFormula {
  Cnf23 formula;
  std::vector<bool> assignment;
};

/// 2in3-SAT₃ formula on n >= 3 variables satisfied by a random planted
/// assignment. Deterministic for a given seed.
PlantedFormula planted_2in3_sat3(std::size_t n, std::uint64_t seed);

/// Vertex names of the even-subgraph gadget. Literal t of clause j joins
/// clause vertex c_j^k through the path c_j^k, v(j,t,k,1), v(j,t,k,2), literal.
struct GadgetMap {
  std::size_t p = 0;
  std::vector<std::vector<Vertex>> path;  ///< path[i]: P^i from s_i to t_i
  std::vector<Vertex> positive;           ///< x_i
  std::vector<Vertex> negative;           ///< x̄_i
  std::vector<std::array<Vertex, 2>> clause;
  std::vector<std::array<std::array<std::array<Vertex, 2>, 2>, 3>> internal;  ///< [j][t][k-1][r-1]

  Vertex s(std::size_t i) const { return path[i].front(); }
  Vertex t(std::size_t i) const { return path[i].back(); }
  Vertex literal(int lit) const;
  Vertex v(std::size_t j, std::size_t t, std::size_t k, std::size_t r) const { return internal[j][t][k - 1][r - 1]; }
  /// The 14 vertices of clause j.
  std::vector<Vertex> clause_block(std::size_t j) const;
};

struct MesInstance {
  Graph graph;
  GadgetMap map;
  std::size_t threshold = 0;  ///< (p+13)n
  std::vector<std::string> flags;
};

/// Throws std::invalid_argument for odd p, p < 4, or shape violations. With
/// relaxed_shape only the three-distinct-variables-per-clause rule is
/// enforced; the result is flagged either way when p < 88 or the shape is
/// relaxed.
MesInstance gen_mes_instance(const Cnf23& f, std::size_t p, bool relaxed_shape = false);

struct ClauseRefutation {
  std::size_t clause;  ///< 0-based
  std::size_t true_literals;
};

/// The even subgraph built from a 2-in-3 assignment, or the first clause
/// without exactly two true literals.
std::variant<VertexSet, ClauseRefutation> mes_witness(const Cnf23& f, const std::vector<bool>& assignment,
                                                      const MesInstance& inst);

struct MosInstance {
  Graph graph;
  Vertex hub = 0;              ///< first wheel vertex
  std::vector<Vertex> rim;     ///< the k+1 cycle vertices, in cycle order
  std::size_t k = 0;
};

/// G plus a (k+1)-wheel whose hub is adjacent to every vertex of G. G keeps
/// its indices. Throws std::invalid_argument for odd k or k < 4.
MosInstance gen_mos_instance(const Graph& g, std::size_t k);

/// Odd set H ∪ wheel built from an even set H of even size.
VertexSet mos_witness(const MosInstance& inst, const VertexSet& even_set);

struct QcolInstance {
  Graph fixed;                 ///< input plus one triangle per component with |V_c|+|E_c| odd
  Orientation orientation;     ///< odd orientation of `fixed`
  Graph subdivided;            ///< every edge of `fixed` subdivided once
  std::vector<Edge> subdivided_edge;  ///< subdivision vertex n'+i sits on subdivided_edge[i]
};

QcolInstance gen_qcol_instance(const Graph& g);

/// Odd coloring of the subdivided graph from a proper coloring of the input
/// with q >= 3 colors. Throws std::invalid_argument if `proper` is not proper.
OddColoring qcol_witness(const Graph& g, const QcolInstance& inst, const std::vector<std::uint32_t>& proper,
                         std::size_t q);

/// Random graph with edge probability num/den; deterministic per seed.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

}  // namespace oddsolve
