#pragma once

// Dynamic programs over decomposition trees. Tables at node w are keyed by
// a pair of representative codes: the side code of the partial solution
// S ⊆ V_w and a code R' for the complement side, whose odd neighborhood
// stands in for the rest of the solution.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <span>
#include <string_view>
#include <vector>

#include "oddsolve/graph.hpp"
#include "oddsolve/parity.hpp"
#include "oddsolve/rankdec.hpp"

namespace oddsolve {

enum class SetProblem { Mos, Mes, OddDs, OddTds };

std::string_view problem_tag(SetProblem p);
std::optional<SetProblem> parse_set_problem(std::string_view tag);

/// Whether vertex v may be in (or out of) S given the parity of
/// |N(v) ∩ S| + [v ∈ N₂(R')].
bool vertex_condition(SetProblem p, bool in_s, bool parity);
bool maximizes(SetProblem p);

/// One table entry as handed to a TableObserver.
struct TableEntry {
  std::uint64_t code;        ///< side code of S
  std::uint64_t other_code;  ///< code of R'
  const VertexSet* set;
};

using TableObserver = std::function<void(std::size_t node, const CutBasis& cut, std::span<const TableEntry> entries)>;

struct DpOptions {
  std::size_t threads = 0;  ///< 0: ODDSOLVE_THREADS, else hardware concurrency
  TableObserver observer;   ///< single-set problems only; called once per node
};

/// Explicit value, else ODDSOLVE_THREADS, else hardware concurrency (>= 1).
std::size_t resolve_threads(std::size_t requested);

constexpr std::size_t kMaxSetDpRank = 12;
constexpr std::size_t kMaxQcolDpRank = 10;

class WidthLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SetResult {
  bool feasible = false;
  std::size_t value = 0;
  VertexSet set;  ///< extremal set, lexicographically smallest among ties
};

/// Throws TreeError if t does not fit g and WidthLimitError above
/// kMaxSetDpRank.
SetResult solve_set_problem(SetProblem p, const Graph& g, const DecompositionTree& t, const DpOptions& opts = {});

inline SetResult solve_mos(const Graph& g, const DecompositionTree& t, const DpOptions& o = {}) {
  return solve_set_problem(SetProblem::Mos, g, t, o);
}
inline SetResult solve_mes(const Graph& g, const DecompositionTree& t, const DpOptions& o = {}) {
  return solve_set_problem(SetProblem::Mes, g, t, o);
}
inline SetResult solve_odd_ds(const Graph& g, const DecompositionTree& t, const DpOptions& o = {}) {
  return solve_set_problem(SetProblem::OddDs, g, t, o);
}
inline SetResult solve_odd_tds(const Graph& g, const DecompositionTree& t, const DpOptions& o = {}) {
  return solve_set_problem(SetProblem::OddTds, g, t, o);
}

/// Odd coloring with at most q classes, or nullopt. Classes are numbered in
/// order of their smallest vertex.
std::optional<OddColoring> solve_odd_qcol(const Graph& g, const DecompositionTree& t, std::size_t q,
                                          const DpOptions& opts = {});

/// nullopt when some component has odd order. Otherwise the least feasible
/// q with its coloring; 0 for the empty graph.
std::optional<OddColoring> solve_chi_odd(const Graph& g, const DecompositionTree& t, const DpOptions& opts = {});

}  // namespace oddsolve
