#include "oddsolve/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oddsolve {

bool Cnf23::all_three_literals() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.size() == 3; });
}

bool Cnf23::distinct_variables() const {
  for (const auto& c : clauses) {
    std::set<int> vars;
    for (int lit : c) vars.insert(std::abs(lit));
    if (vars.size() != c.size()) return false;
  }
  return true;
}

std::vector<std::size_t> Cnf23::occurrences() const {
  std::vector<std::size_t> occ(num_vars, 0);
  for (const auto& c : clauses) {
    std::set<int> vars;
    for (int lit : c) vars.insert(std::abs(lit));
    for (int v : vars) ++occ[static_cast<std::size_t>(v - 1)];
  }
  return occ;
}

bool Cnf23::is_2in3_sat3_shape() const {
  if (!all_three_literals() || !distinct_variables() || clauses.size() != num_vars) return false;
  const auto occ = occurrences();
  return std::all_of(occ.begin(), occ.end(), [](std::size_t k) { return k == 3; });
}

Cnf23 parse_cnf(std::string_view text, bool strict) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t declared_clauses = 0;
  Cnf23 f;
  std::vector<int> current;
  std::size_t current_line = 0;
  auto finish = [&](std::size_t at) {
    if (current.empty()) throw ParseError(at, "empty clause");
    if (strict && current.size() != 3)
      throw ParseError(at, "clause has " + std::to_string(current.size()) + " literals, expected 3");
    f.clauses.push_back(std::move(current));
    current.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      long long nv = -1, nc = -1;
      if (header || !(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      f.num_vars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "clause before 'p cnf' header");
    do {
      long long lit = 0;
      try {
        std::size_t pos = 0;
        lit = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected an integer literal, got '" + tok + "'");
      }
      if (lit == 0) {
        finish(lineno);
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > f.num_vars)
        throw ParseError(lineno, "literal " + std::to_string(lit) + " out of range");
      if (current.empty()) current_line = lineno;
      current.push_back(static_cast<int>(lit));
    } while (ls >> tok);
  }
  if (!header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!current.empty()) finish(current_line);
  if (f.clauses.size() != declared_clauses)
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                 std::to_string(f.clauses.size()));
  return f;
}

std::string write_cnf(const Cnf23& f, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "c " + std::string(comment) + "\n";
  out += "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

namespace {

bool literal_true(int lit, const std::vector<bool>& a) {
  const bool v = a[static_cast<std::size_t>(std::abs(lit) - 1)];
  return lit > 0 ? v : !v;
}

}  // namespace

bool satisfies_2in3(const Cnf23& f, const std::vector<bool>& assignment) {
  if (assignment.size() != f.num_vars) return false;
  for (const auto& c : f.clauses) {
    std::size_t t = 0;
    for (int lit : c) t += literal_true(lit, assignment) ? 1 : 0;
    if (t != 2) return false;
  }
  return true;
}

PlantedFormula planted_2in3_sat3(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("2in3-SAT3 needs at least 3 variables");
  std::mt19937_64 rng(seed);
  PlantedFormula out;
  out.assignment.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.assignment[v] = (rng() & 1U) != 0;
  std::vector<int> slots;
  for (std::size_t v = 1; v <= n; ++v)
    for (int k = 0; k < 3; ++k) slots.push_back(static_cast<int>(v));
  // Shuffle the 3n variable slots into n clauses until no clause repeats a
  // variable.
  while (true) {
    for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[rng() % i]);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = slots[3 * j] != slots[3 * j + 1] && slots[3 * j] != slots[3 * j + 2] && slots[3 * j + 1] != slots[3 * j + 2];
    if (ok) break;
  }
  out.formula.num_vars = n;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t false_pos = rng() % 3;
    std::vector<int> clause;
    for (std::size_t t = 0; t < 3; ++t) {
      const int v = slots[3 * j + t];
      const bool value = out.assignment[static_cast<std::size_t>(v - 1)];
      const bool want_true = t != false_pos;
      clause.push_back(value == want_true ? v : -v);
    }
    out.formula.clauses.push_back(std::move(clause));
  }
  return out;
}

Vertex GadgetMap::literal(int lit) const {
  const std::size_t i = static_cast<std::size_t>(std::abs(lit) - 1);
  return lit > 0 ? positive[i] : negative[i];
}

std::vector<Vertex> GadgetMap::clause_block(std::size_t j) const {
  std::vector<Vertex> out{clause[j][0], clause[j][1]};
  for (const auto& per_literal : internal[j])
    for (const auto& per_k : per_literal)
      for (Vertex v : per_k) out.push_back(v);
  return out;
}

MesInstance gen_mes_instance(const Cnf23& f, std::size_t p, bool relaxed_shape) {
  if (p % 2 != 0) throw std::invalid_argument("p must be even");
  if (p < 4) throw std::invalid_argument("p must be at least 4");
  if (!f.all_three_literals() || !f.distinct_variables())
    throw std::invalid_argument("every clause needs three literals over distinct variables");
  if (!relaxed_shape && !f.is_2in3_sat3_shape())
    throw std::invalid_argument("formula is not in 2in3-SAT3 shape (each variable in exactly 3 clauses)");

  MesInstance inst;
  if (p < 88) inst.flags.push_back("p < 88: equivalence with the formula is not guaranteed");
  if (relaxed_shape && !f.is_2in3_sat3_shape()) inst.flags.push_back("shape relaxed: formula is not 2in3-SAT3");
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  GadgetMap& map = inst.map;
  map.p = p;
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> path(p);
    for (std::size_t r = 0; r < p; ++r) path[r] = next++;
    for (std::size_t r = 0; r + 1 < p; ++r) edges.push_back({path[r], path[r + 1]});
    const Vertex x = next++;
    const Vertex xb = next++;
    edges.push_back({path.front(), x});
    edges.push_back({path.front(), xb});
    edges.push_back({path.back(), x});
    edges.push_back({path.back(), xb});
    edges.push_back({x, xb});
    map.path.push_back(std::move(path));
    map.positive.push_back(x);
    map.negative.push_back(xb);
  }
  map.clause.resize(m);
  map.internal.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    map.clause[j] = {next, next + 1};
    next += 2;
    for (std::size_t t = 0; t < 3; ++t) {
      for (std::size_t k = 0; k < 2; ++k) {
        const Vertex v1 = next++;
        const Vertex v2 = next++;
        map.internal[j][t][k] = {v1, v2};
        edges.push_back({map.clause[j][k], v1});
        edges.push_back({v1, v2});
        edges.push_back({v2, map.literal(f.clauses[j][t])});
      }
    }
  }
  inst.graph = Graph::from_edges(next, edges);
  inst.threshold = (p + 13) * n;
  return inst;
}

std::variant<VertexSet, ClauseRefutation> mes_witness(const Cnf23& f, const std::vector<bool>& assignment,
                                                      const MesInstance& inst) {
  if (assignment.size() != f.num_vars) throw std::invalid_argument("assignment length differs from variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::size_t t = 0;
    for (int lit : f.clauses[j]) t += literal_true(lit, assignment) ? 1 : 0;
    if (t != 2) return ClauseRefutation{j, t};
  }
  const GadgetMap& map = inst.map;
  VertexSet h = inst.graph.empty_set();
  for (std::size_t i = 0; i < f.num_vars; ++i) {
    for (Vertex v : map.path[i]) h.set(v);
    h.set(assignment[i] ? map.positive[i] : map.negative[i]);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    h.set(map.clause[j][0]);
    h.set(map.clause[j][1]);
    for (std::size_t t = 0; t < 3; ++t) {
      if (literal_true(f.clauses[j][t], assignment)) {
        for (std::size_t k = 1; k <= 2; ++k)
          for (std::size_t r = 1; r <= 2; ++r) h.set(map.v(j, t, k, r));
      } else {
        h.set(map.v(j, t, 1, 2));
        h.set(map.v(j, t, 2, 2));
      }
    }
  }
  return h;
}

MosInstance gen_mos_instance(const Graph& g, std::size_t k) {
  if (k % 2 != 0) throw std::invalid_argument("k must be even");
  if (k < 4) throw std::invalid_argument("k must be at least 4");
  const std::size_t n = g.order();
  MosInstance inst;
  inst.k = k;
  inst.hub = n;
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i <= k; ++i) inst.rim.push_back(n + 1 + i);
  for (std::size_t i = 0; i <= k; ++i) {
    edges.push_back({inst.hub, inst.rim[i]});
    edges.push_back({inst.rim[i], inst.rim[(i + 1) % (k + 1)]});
  }
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, inst.hub});
  inst.graph = Graph::from_edges(n + k + 2, edges);
  return inst;
}

VertexSet mos_witness(const MosInstance& inst, const VertexSet& even_set) {
  if (even_set.count() % 2 != 0) throw std::invalid_argument("even set must have even size");
  VertexSet out = inst.graph.empty_set();
  even_set.for_each([&](std::size_t v) { out.set(v); });
  out.set(inst.hub);
  for (Vertex r : inst.rim) out.set(r);
  return out;
}

QcolInstance gen_qcol_instance(const Graph& g) {
  QcolInstance inst;
  std::vector<Edge> edges = g.edges();
  std::size_t n = g.order();
  for (const VertexSet& comp : g.components()) {
    std::size_t twice_edges = 0;
    comp.for_each([&](std::size_t v) { twice_edges += g.degree(v); });
    if ((comp.count() + twice_edges / 2) % 2 == 0) continue;
    const Vertex v = comp.first();
    const Vertex v1 = n, v2 = n + 1, v3 = n + 2;
    n += 3;
    edges.push_back({v, v1});
    edges.push_back({v1, v2});
    edges.push_back({v2, v3});
    edges.push_back({v1, v3});
  }
  inst.fixed = Graph::from_edges(n, edges);
  auto orient = odd_orientation(inst.fixed);
  if (std::holds_alternative<OrientationFailure>(orient))
    throw InternalError("odd orientation missing after parity fix-up");
  inst.orientation = std::get<Orientation>(std::move(orient));
  inst.subdivided_edge = inst.fixed.edges();
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < inst.subdivided_edge.size(); ++i) {
    const Vertex mid = n + i;
    sub.push_back({inst.subdivided_edge[i].u, mid});
    sub.push_back({inst.subdivided_edge[i].v, mid});
  }
  inst.subdivided = Graph::from_edges(n + inst.subdivided_edge.size(), sub);
  return inst;
}

OddColoring qcol_witness(const Graph& g, const QcolInstance& inst, const std::vector<std::uint32_t>& proper,
                         std::size_t q) {
  if (q < 3) throw std::invalid_argument("the forward witness needs q >= 3");
  if (proper.size() != g.order()) throw std::invalid_argument("coloring length differs from vertex count");
  for (const Edge& e : g.edges())
    if (proper[e.u] == proper[e.v] || proper[e.u] >= q || proper[e.v] >= q)
      throw std::invalid_argument("input coloring is not a proper q-coloring");
  const Graph& fixed = inst.fixed;
  std::vector<std::uint32_t> color(fixed.order(), 0);
  std::copy(proper.begin(), proper.end(), color.begin());
  // Triangles were appended as (v1, v2, v3) with v1 attached to the host.
  for (Vertex v1 = g.order(); v1 < fixed.order(); v1 += 3) {
    Vertex host = 0;
    fixed.neighbors(v1).for_each([&](std::size_t w) {
      if (w < g.order()) host = w;
    });
    color[v1] = color[host] == 0 ? 1 : 0;
    std::uint32_t c = 0;
    for (Vertex w : {v1 + 1, v1 + 2}) {
      while (c == color[v1]) ++c;
      color[w] = c++;
    }
  }
  std::vector<Vertex> head_of(inst.subdivided_edge.size());
  for (const Edge& arc : inst.orientation.arcs) {
    const Edge key{std::min(arc.u, arc.v), std::max(arc.u, arc.v)};
    const auto it = std::lower_bound(inst.subdivided_edge.begin(), inst.subdivided_edge.end(), key,
                                     [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    head_of[static_cast<std::size_t>(it - inst.subdivided_edge.begin())] = arc.v;
  }
  OddColoring out;
  out.q = static_cast<std::uint32_t>(q);
  out.color.assign(inst.subdivided.order(), 0);
  for (Vertex v = 0; v < fixed.order(); ++v) out.color[v] = color[v];
  for (std::size_t i = 0; i < head_of.size(); ++i) out.color[fixed.order() + i] = color[head_of[i]];
  return out;
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % den < num) g.add_edge(u, v);
  return g;
}

}  // namespace oddsolve
