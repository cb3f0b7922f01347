#include "oddsolve/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oddsolve {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u + 1));
  if (adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
  return true;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (std::size_t v = adj_[u].next(u + 1); v != BitVec::npos; v = adj_[u].next(v + 1))
      out.push_back({u, v});
  return out;
}

VertexSet Graph::n2_neighborhood(const VertexSet& x) const {
  VertexSet out(order());
  x.for_each([&](std::size_t u) { out ^= adj_[u]; });
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  const std::vector<std::size_t> members = keep.members();
  std::vector<std::size_t> index(order(), BitVec::npos);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  Graph h(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const BitVec inside = adj_[members[i]] & keep;
    inside.for_each([&](std::size_t w) {
      if (index[w] > i) h.add_edge(i, index[w]);
    });
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(order());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining.any()) {
    VertexSet comp(order());
    VertexSet frontier(order());
    frontier.set(remaining.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(order());
      frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
      next &= within;
      next.subtract(comp);
      frontier = std::move(next);
    }
    remaining.subtract(comp);
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size() || tok.front() == '-') throw ParseError(line, "expected an integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared_m = 0;
  std::size_t edge_lines = 0;
  Graph g;
  std::size_t duplicates = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (kind == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 3 || (toks[0] != "edge" && toks[0] != "col"))
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      g = Graph(parse_index(toks[1], lineno));
      declared_m = parse_index(toks[2], lineno);
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError(lineno, "edge line before header");
      if (toks.size() != 2) throw ParseError(lineno, "malformed edge line");
      const std::size_t u = parse_index(toks[0], lineno);
      const std::size_t v = parse_index(toks[1], lineno);
      if (u < 1 || u > g.order() || v < 1 || v > g.order())
        throw ParseError(lineno, "vertex index out of range");
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      ++edge_lines;
      if (!g.add_edge(u - 1, v - 1)) ++duplicates;
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p edge' header");
  if (warnings != nullptr) {
    if (duplicates > 0)
      warnings->push_back("collapsed " + std::to_string(duplicates) + " duplicate edge line(s); m=" +
                          std::to_string(g.edge_count()));
    if (edge_lines != declared_m)
      warnings->push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                          std::to_string(edge_lines) + " edge lines");
  }
  return g;
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
  return parse_dimacs(read_text_file(path), warnings);
}

}  // namespace oddsolve
