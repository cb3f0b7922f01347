#include "oddsolve/dp.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "dp_internal.hpp"

namespace oddsolve {

namespace detail {

namespace {

std::vector<std::uint32_t> tabulate(const std::vector<std::uint64_t>& generators) {
  std::vector<std::uint32_t> table(std::size_t{1} << generators.size(), 0);
  for (std::size_t m = 1; m < table.size(); ++m)
    table[m] = table[m & (m - 1)] ^ static_cast<std::uint32_t>(generators[std::countr_zero(m)]);
  return table;
}

template <typename Code>
std::vector<std::uint32_t> map_vertices(const Graph& g, const std::vector<Vertex>& vertices, Code&& code) {
  std::vector<std::uint64_t> gens;
  gens.reserve(vertices.size());
  for (Vertex v : vertices) gens.push_back(code(VertexSet::from_members(g.order(), {v})));
  return tabulate(gens);
}

}  // namespace

JoinMaps build_join_maps(const Graph& g, const CutBasis& x, const CutBasis& y, const CutBasis& a) {
  JoinMaps m;
  m.rx = x.rank();
  m.ry = y.rank();
  m.ra = a.rank();
  auto side_a = [&](const VertexSet& s) { return side_code(g, a, s); };
  auto other_x = [&](const VertexSet& s) { return other_code(g, x, s); };
  auto other_y = [&](const VertexSet& s) { return other_code(g, y, s); };
  m.lxa = map_vertices(g, x.side_basis_vertices, side_a);
  m.lya = map_vertices(g, y.side_basis_vertices, side_a);
  m.mxy = map_vertices(g, x.side_basis_vertices, other_y);
  m.myx = map_vertices(g, y.side_basis_vertices, other_x);
  m.max = map_vertices(g, a.other_basis_vertices, other_x);
  m.may = map_vertices(g, a.other_basis_vertices, other_y);
  return m;
}

CutCache::CutCache(const Graph& g, const DecompositionTree& t)
    : g_(g), sets_(t.vertex_sets()), cuts_(t.nodes().size()) {}

const CutBasis& CutCache::compute(std::size_t node) {
  cuts_[node] = std::make_unique<CutBasis>(cut_basis(g_, sets_[node]));
  return *cuts_[node];
}

}  // namespace detail

std::string_view problem_tag(SetProblem p) {
  switch (p) {
    case SetProblem::Mos: return "mos";
    case SetProblem::Mes: return "mes";
    case SetProblem::OddDs: return "odd-ds";
    case SetProblem::OddTds: return "odd-tds";
  }
  return "?";
}

std::optional<SetProblem> parse_set_problem(std::string_view tag) {
  for (SetProblem p : {SetProblem::Mos, SetProblem::Mes, SetProblem::OddDs, SetProblem::OddTds})
    if (problem_tag(p) == tag) return p;
  return std::nullopt;
}

bool vertex_condition(SetProblem p, bool in_s, bool parity) {
  switch (p) {
    case SetProblem::Mos: return !in_s || parity;
    case SetProblem::Mes: return !in_s || !parity;
    case SetProblem::OddDs: return in_s || parity;
    case SetProblem::OddTds: return parity;
  }
  return false;
}

bool maximizes(SetProblem p) { return p == SetProblem::Mos || p == SetProblem::Mes; }

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ODDSOLVE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Dense table over (side code, other code); key = code | other << rank.
struct SetTable {
  std::size_t rank = 0;
  std::vector<std::int32_t> slot;
  std::vector<VertexSet> sets;

  explicit SetTable(std::size_t r) : rank(r), slot(std::size_t{1} << (2 * r), -1) {}
  const VertexSet* find(std::uint32_t code, std::uint32_t other) const {
    const std::int32_t i = slot[code | (static_cast<std::size_t>(other) << rank)];
    return i < 0 ? nullptr : &sets[static_cast<std::size_t>(i)];
  }
};

class SetDp {
 public:
  SetDp(SetProblem p, const Graph& g, std::size_t threads) : p_(p), g_(g), threads_(threads) {}

  bool better(std::size_t size, const VertexSet& cand, const VertexSet& cur) const {
    const std::size_t cur_size = cur.count();
    if (size != cur_size) return maximizes(p_) ? size > cur_size : size < cur_size;
    return lex_less(cand, cur);
  }

  SetTable leaf(Vertex u, const CutBasis& cut) const {
    const std::size_t r = cut.rank();
    SetTable t(r);
    for (int in = 0; in < 2; ++in) {
      VertexSet s(g_.order());
      if (in != 0) s.set(u);
      const std::uint32_t code = (in != 0 && r == 1) ? 1U : 0U;
      for (std::uint32_t other = 0; other < (1U << r); ++other) {
        const bool out = other != 0;
        if (!vertex_condition(p_, in != 0, out)) continue;
        std::int32_t& sl = t.slot[code | (static_cast<std::size_t>(other) << r)];
        if (sl < 0) {
          sl = static_cast<std::int32_t>(t.sets.size());
          t.sets.push_back(s);
        } else if (better(s.count(), s, t.sets[static_cast<std::size_t>(sl)])) {
          t.sets[static_cast<std::size_t>(sl)] = s;
        }
      }
    }
    return t;
  }

  SetTable join(const SetTable& tx, const SetTable& ty, const detail::JoinMaps& m) const {
    SetTable ta(m.ra);
    const std::size_t others = std::size_t{1} << m.ra;
    const std::size_t cx_count = std::size_t{1} << m.rx;
    const std::size_t cy_count = std::size_t{1} << m.ry;
    const std::size_t work = others * cx_count * cy_count;
    const std::size_t workers = work < (std::size_t{1} << 12) ? 1 : threads_;
    std::vector<std::vector<VertexSet>> pools(std::min(workers, others));

    // Each worker owns a block of R' codes for A, so it writes disjoint keys.
    detail::parallel_blocks(workers, others, [&](std::size_t w, std::size_t begin, std::size_t end) {
      auto& pool = pools[w];
      for (std::size_t oa = begin; oa < end; ++oa) {
        const std::uint32_t base_x = m.max[oa];
        const std::uint32_t base_y = m.may[oa];
        for (std::uint32_t cx = 0; cx < cx_count; ++cx) {
          const std::uint32_t oy = base_y ^ m.mxy[cx];
          for (std::uint32_t cy = 0; cy < cy_count; ++cy) {
            const VertexSet* sy = ty.find(cy, oy);
            if (sy == nullptr) continue;
            const VertexSet* sx = tx.find(cx, base_x ^ m.myx[cy]);
            if (sx == nullptr) continue;
            const std::uint32_t ca = m.lxa[cx] ^ m.lya[cy];
            std::int32_t& sl = ta.slot[ca | (oa << m.ra)];
            const std::size_t size = sx->count() + sy->count();
            if (sl < 0) {
              sl = static_cast<std::int32_t>(pool.size());
              pool.push_back(*sx | *sy);
              continue;
            }
            VertexSet& cur = pool[static_cast<std::size_t>(sl)];
            if (maximizes(p_) ? size < cur.count() : size > cur.count()) continue;
            VertexSet cand = *sx | *sy;
            if (better(size, cand, cur)) cur = std::move(cand);
          }
        }
      }
    });

    // Relocate per-worker pools into one; block w covers a contiguous range
    // of R' codes, i.e. of keys.
    std::vector<std::size_t> offset(pools.size() + 1, 0);
    for (std::size_t w = 0; w < pools.size(); ++w) offset[w + 1] = offset[w] + pools[w].size();
    const std::size_t chunk = pools.empty() ? 0 : (others + pools.size() - 1) / pools.size();
    for (std::size_t key = 0; key < ta.slot.size(); ++key) {
      if (ta.slot[key] < 0) continue;
      const std::size_t w = chunk == 0 ? 0 : (key >> m.ra) / chunk;
      ta.slot[key] += static_cast<std::int32_t>(offset[w]);
    }
    ta.sets.reserve(offset.back());
    for (auto& pool : pools)
      for (auto& s : pool) ta.sets.push_back(std::move(s));
    return ta;
  }

 private:
  SetProblem p_;
  const Graph& g_;
  std::size_t threads_;
};

void report(const TableObserver& obs, std::size_t node, const CutBasis& cut, const SetTable& t) {
  std::vector<TableEntry> entries;
  for (std::size_t key = 0; key < t.slot.size(); ++key) {
    if (t.slot[key] < 0) continue;
    const std::uint64_t mask = (std::uint64_t{1} << t.rank) - 1;
    entries.push_back({key & mask, key >> t.rank, &t.sets[static_cast<std::size_t>(t.slot[key])]});
  }
  obs(node, cut, entries);
}

}  // namespace

SetResult solve_set_problem(SetProblem p, const Graph& g, const DecompositionTree& t, const DpOptions& opts) {
  check_tree_fits(g, t);
  SetResult res;
  if (g.order() == 0) {
    res.feasible = true;
    res.set = g.empty_set();
    return res;
  }
  const SetDp dp(p, g, resolve_threads(opts.threads));
  detail::CutCache cuts(g, t);
  std::vector<std::unique_ptr<SetTable>> tables(t.nodes().size());
  for (std::size_t w : t.postorder()) {
    const auto& nd = t.node(w);
    const CutBasis& cut = cuts.compute(w);
    if (cut.rank() > kMaxSetDpRank)
      throw WidthLimitError("cut rank " + std::to_string(cut.rank()) + " exceeds the supported " +
                            std::to_string(kMaxSetDpRank));
    if (nd.is_leaf()) {
      tables[w] = std::make_unique<SetTable>(dp.leaf(nd.vertex, cut));
    } else {
      const auto maps = detail::build_join_maps(g, cuts.get(nd.left), cuts.get(nd.right), cut);
      tables[w] = std::make_unique<SetTable>(dp.join(*tables[nd.left], *tables[nd.right], maps));
      tables[nd.left].reset();
      tables[nd.right].reset();
      cuts.drop(nd.left);
      cuts.drop(nd.right);
    }
    if (opts.observer) report(opts.observer, w, cut, *tables[w]);
  }
  const SetTable& root = *tables[t.root()];
  if (const VertexSet* s = root.find(0, 0)) {
    res.feasible = true;
    res.value = s->count();
    res.set = *s;
  }
  return res;
}

}  // namespace oddsolve
