#pragma once

// Brute-force reference solvers. Each enforces a hard cap on n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oddsolve/dp.hpp"
#include "oddsolve/graph.hpp"
#include "oddsolve/parity.hpp"

namespace oddsolve {

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kOracleSubgraphMax = 24;  // mos, mes
constexpr std::size_t kOracleDominationMax = 20;  // odd-ds, odd-tds
constexpr std::size_t kOracleChiMax = 12;
constexpr std::size_t kOracleColoringMax = 24;  // fixed-q odd coloring, proper coloring
constexpr std::size_t kOracleTreewidthMax = 16;

/// Subsets are scanned by size (descending for mos/mes, ascending for the
/// domination problems), lexicographically within a size; the first hit is
/// the witness.
SetResult oracle_set_problem(SetProblem p, const Graph& g);
inline SetResult oracle_mos(const Graph& g) { return oracle_set_problem(SetProblem::Mos, g); }
inline SetResult oracle_mes(const Graph& g) { return oracle_set_problem(SetProblem::Mes, g); }
inline SetResult oracle_odd_ds(const Graph& g) { return oracle_set_problem(SetProblem::OddDs, g); }
inline SetResult oracle_odd_tds(const Graph& g) { return oracle_set_problem(SetProblem::OddTds, g); }

/// Exhaustive search over colorings with at most q colors (colors used in
/// order of first appearance). Each vertex is checked as soon as it and all
/// of its neighbors are colored.
std::optional<OddColoring> oracle_odd_qcol(const Graph& g, std::size_t q);

struct OracleChi {
  enum class Status { Value, Undefined, AboveLimit };
  Status status = Status::Undefined;
  std::size_t value = 0;
  OddColoring coloring;
};

/// Tries q = 1..q_max in turn. n <= kOracleChiMax.
OracleChi oracle_chi_odd(const Graph& g, std::size_t q_max);

/// Proper vertex coloring with at most q colors.
std::optional<std::vector<std::uint32_t>> oracle_proper_coloring(const Graph& g, std::size_t q);

/// Exact tree-width by the subset recurrence over elimination prefixes; -1
/// for the empty graph.
int oracle_treewidth(const Graph& g);

}  // namespace oddsolve
