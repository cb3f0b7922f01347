#include "oddsolve/rankdec.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace oddsolve {

DecompositionTree::DecompositionTree(std::vector<Node> nodes, std::size_t root, std::size_t num_vertices)
    : nodes_(std::move(nodes)), root_(root), num_vertices_(num_vertices), leaf_of_(num_vertices, npos) {
  if (nodes_.empty()) {
    if (num_vertices_ != 0) throw TreeError("empty tree for a non-empty graph");
    root_ = npos;
    return;
  }
  if (root_ >= nodes_.size()) throw TreeError("missing root");
  std::vector<std::size_t> parent(nodes_.size(), npos);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    if ((nd.left == npos) != (nd.right == npos)) throw TreeError("not full binary: node with one child");
    if (nd.is_leaf()) {
      if (nd.vertex >= num_vertices_) throw TreeError("leaf vertex out of range");
      if (leaf_of_[nd.vertex] != npos) throw TreeError("duplicate leaf vertex " + std::to_string(nd.vertex + 1));
      leaf_of_[nd.vertex] = i;
      continue;
    }
    if (nd.vertex != npos) throw TreeError("internal node carries a vertex");
    for (std::size_t c : {nd.left, nd.right}) {
      if (c >= nodes_.size()) throw TreeError("dangling child id");
      if (c == root_) throw TreeError("root used as a child");
      if (parent[c] != npos) throw TreeError("node has two parents");
      parent[c] = i;
    }
  }
  for (Vertex v = 0; v < num_vertices_; ++v)
    if (leaf_of_[v] == npos) throw TreeError("no leaf for vertex " + std::to_string(v + 1));
  // Every node must hang below the root.
  std::vector<bool> reached(nodes_.size(), false);
  std::vector<std::size_t> stack{root_};
  std::size_t count = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (reached[i]) throw TreeError("cycle in tree");
    reached[i] = true;
    ++count;
    if (!nodes_[i].is_leaf()) {
      stack.push_back(nodes_[i].left);
      stack.push_back(nodes_[i].right);
    }
  }
  if (count != nodes_.size()) throw TreeError("node unreachable from root");
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i].parent = parent[i];
}

std::vector<std::size_t> DecompositionTree::postorder() const {
  std::vector<std::size_t> out;
  if (nodes_.empty()) return out;
  out.reserve(nodes_.size());
  std::vector<std::pair<std::size_t, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    if (expanded || nodes_[i].is_leaf()) {
      out.push_back(i);
      continue;
    }
    stack.push_back({i, true});
    stack.push_back({nodes_[i].right, false});
    stack.push_back({nodes_[i].left, false});
  }
  return out;
}

std::vector<VertexSet> DecompositionTree::vertex_sets() const {
  std::vector<VertexSet> sets(nodes_.size(), VertexSet(num_vertices_));
  for (std::size_t i : postorder()) {
    const Node& nd = nodes_[i];
    if (nd.is_leaf())
      sets[i].set(nd.vertex);
    else
      sets[i] = sets[nd.left] | sets[nd.right];
  }
  return sets;
}

CutBasis cut_basis(const Graph& g, const VertexSet& a) {
  CutBasis cb;
  cb.side_set = a;
  cb.side = a.members();
  cb.other = a.complement().members();
  cb.position.assign(g.order(), 0);
  for (std::size_t i = 0; i < cb.side.size(); ++i) cb.position[cb.side[i]] = i;
  for (std::size_t j = 0; j < cb.other.size(); ++j) cb.position[cb.other[j]] = j;
  const auto& column = cb.position;
  cb.matrix = gf2::Matrix(cb.side.size(), cb.other.size());
  for (std::size_t i = 0; i < cb.side.size(); ++i) {
    const BitVec across = g.neighbors(cb.side[i]) & a.complement();
    across.for_each([&](std::size_t w) { cb.matrix.set(i, column[w]); });
  }
  cb.transposed = cb.matrix.transpose();
  cb.side_basis = gf2::rref(cb.matrix);
  cb.other_basis = gf2::rref(cb.transposed);
  for (std::size_t r : cb.side_basis.basis_row_indices) cb.side_basis_vertices.push_back(cb.side[r]);
  for (std::size_t r : cb.other_basis.basis_row_indices) cb.other_basis_vertices.push_back(cb.other[r]);
  return cb;
}

std::size_t cut_rank(const Graph& g, const VertexSet& a) { return cut_basis(g, a).rank(); }

namespace {

std::uint64_t to_code(const std::optional<BitVec>& coords) {
  if (!coords) throw std::logic_error("vector outside the cut row space");
  if (coords->size() > 64) throw std::invalid_argument("cut rank above 64");
  std::uint64_t code = 0;
  coords->for_each([&](std::size_t i) { code |= std::uint64_t{1} << i; });
  return code;
}

VertexSet pick(const std::vector<Vertex>& basis, std::uint64_t code, std::size_t n) {
  VertexSet out(n);
  for (std::size_t i = 0; i < basis.size() && i < 64; ++i)
    if ((code >> i) & 1U) out.set(basis[i]);
  return out;
}

}  // namespace

std::uint64_t side_code(const Graph& g, const CutBasis& cb, const VertexSet& x) {
  const VertexSet across = g.n2_neighborhood(x) & cb.side_set.complement();
  BitVec v(cb.other.size());
  across.for_each([&](std::size_t w) { v.set(cb.position[w]); });
  return to_code(gf2::coordinates(cb.side_basis, v));
}

std::uint64_t other_code(const Graph& g, const CutBasis& cb, const VertexSet& y) {
  const VertexSet across = g.n2_neighborhood(y) & cb.side_set;
  BitVec v(cb.side.size());
  across.for_each([&](std::size_t w) { v.set(cb.position[w]); });
  return to_code(gf2::coordinates(cb.other_basis, v));
}

VertexSet side_representative(const CutBasis& cb, std::uint64_t code, std::size_t n) {
  return pick(cb.side_basis_vertices, code, n);
}

VertexSet other_representative(const CutBasis& cb, std::uint64_t code, std::size_t n) {
  return pick(cb.other_basis_vertices, code, n);
}

void check_tree_fits(const Graph& g, const DecompositionTree& t) {
  if (t.num_vertices() != g.order())
    throw TreeError("tree has " + std::to_string(t.num_vertices()) + " leaves, graph has " +
                    std::to_string(g.order()) + " vertices");
}

std::size_t width(const Graph& g, const DecompositionTree& t) {
  check_tree_fits(g, t);
  std::size_t w = 0;
  for (const VertexSet& s : t.vertex_sets()) w = std::max(w, cut_rank(g, s));
  return w;
}

DecompositionTree caterpillar(std::size_t n, std::span<const Vertex> order) {
  if (order.size() != n) throw std::invalid_argument("order is not a permutation");
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
    seen[v] = true;
  }
  using Node = DecompositionTree::Node;
  std::vector<Node> nodes;
  if (n == 0) return DecompositionTree(nodes, DecompositionTree::npos, 0);
  for (Vertex v : order) {
    Node leaf;
    leaf.vertex = v;
    nodes.push_back(leaf);
  }
  std::size_t spine = 0;
  for (std::size_t i = 1; i < n; ++i) {
    Node inner;
    inner.left = spine;
    inner.right = i;
    nodes.push_back(inner);
    spine = nodes.size() - 1;
  }
  return DecompositionTree(std::move(nodes), spine, n);
}

std::vector<Vertex> bfs_order_from(const Graph& g, Vertex root) {
  std::vector<Vertex> out;
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    out.push_back(v);
    g.neighbors(v).for_each([&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    });
  }
  return out;
}

std::vector<Vertex> heuristic_order(const Graph& g, OrderMethod method) {
  std::vector<Vertex> out;
  out.reserve(g.order());
  if (method == OrderMethod::Degree) {
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(v);
    std::vector<std::size_t> deg(g.order());
    for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    return out;
  }
  for (const VertexSet& comp : g.components()) {
    Vertex root = comp.first();
    comp.for_each([&](std::size_t v) {
      if (g.degree(v) > g.degree(root)) root = v;
    });
    const auto part = bfs_order_from(g, root);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t linear_width(const Graph& g, std::span<const Vertex> order) {
  std::size_t w = 0;
  VertexSet prefix(g.order());
  for (Vertex v : order) {
    prefix.set(v);
    w = std::max(w, cut_rank(g, prefix));
  }
  return w;
}

namespace {

// Rank of the cut matrix for subset `s` of an n <= 32 vertex graph given as
// row masks.
std::size_t mask_cut_rank(const std::vector<std::uint32_t>& adj, std::uint32_t s, std::uint32_t all) {
  std::uint32_t basis[32] = {};
  std::size_t rk = 0;
  const std::uint32_t outside = all & ~s;
  for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
    std::uint32_t row = adj[static_cast<std::size_t>(std::countr_zero(rest))] & outside;
    while (row != 0) {
      const int p = std::countr_zero(row);
      if (basis[p] == 0) {
        basis[p] = row;
        ++rk;
        break;
      }
      row ^= basis[p];
    }
  }
  return rk;
}

}  // namespace

std::vector<Vertex> optimal_linear_order(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kOptimalLinearMaxVertices)
    throw std::invalid_argument("optimal-linear supports at most " + std::to_string(kOptimalLinearMaxVertices) +
                                " vertices");
  if (n == 0) return {};
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) g.neighbors(v).for_each([&](std::size_t w) { adj[v] |= 1U << w; });
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> best(states, 0);
  std::vector<std::uint8_t> last(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    std::uint8_t b = 255;
    std::uint8_t arg = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint8_t cand = best[mask & ~(1U << v)];
      if (cand < b) {
        b = cand;
        arg = static_cast<std::uint8_t>(v);
      }
    }
    const auto cr = static_cast<std::uint8_t>(mask_cut_rank(adj, mask, all));
    best[s] = std::max(b, cr);
    last[s] = arg;
  }
  std::vector<Vertex> order(n);
  std::uint32_t s = all;
  for (std::size_t i = n; i-- > 0;) {
    order[i] = last[s];
    s &= ~(1U << last[s]);
  }
  return order;
}

DecompositionTree optimal_linear(const Graph& g) {
  const auto order = optimal_linear_order(g);
  return caterpillar(g.order(), order);
}

DecompositionTree parse_tree(std::string_view text) {
  using Node = DecompositionTree::Node;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::map<long long, std::size_t> index;
  struct Pending {
    long long left, right;
  };
  std::vector<Node> nodes;
  std::vector<Pending> pending;
  std::vector<std::size_t> line_of;
  long long root_id = 0;
  bool have_root = false;
  std::size_t max_vertex = 0;
  std::set<long long> seen_vertex;

  auto define = [&](long long id) {
    if (index.count(id) != 0) throw ParseError(lineno, "duplicate node id " + std::to_string(id));
    index[id] = nodes.size();
    nodes.emplace_back();
    pending.push_back({-1, -1});
    line_of.push_back(lineno);
  };
  auto integer = [&](const std::string& tok) -> long long {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(tok, &pos);
      if (pos == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#' || kind == "c") continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (kind == "leaf") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'leaf <id> <vertex>'");
      define(integer(toks[0]));
      const long long v = integer(toks[1]);
      if (v < 1) throw ParseError(lineno, "vertex index out of range");
      if (!seen_vertex.insert(v).second) throw ParseError(lineno, "duplicate leaf vertex " + std::to_string(v));
      nodes.back().vertex = static_cast<Vertex>(v - 1);
      max_vertex = std::max(max_vertex, static_cast<std::size_t>(v));
    } else if (kind == "node") {
      if (toks.size() != 3) throw ParseError(lineno, "not full binary: node needs exactly two children");
      define(integer(toks[0]));
      pending.back() = {integer(toks[1]), integer(toks[2])};
    } else if (kind == "root") {
      if (toks.size() != 1) throw ParseError(lineno, "expected 'root <id>'");
      if (have_root) throw ParseError(lineno, "duplicate root line");
      root_id = integer(toks[0]);
      have_root = true;
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!have_root) throw TreeError("missing root");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (pending[i].left == -1 && pending[i].right == -1 && nodes[i].vertex != Vertex(-1)) continue;
    const auto l = index.find(pending[i].left);
    const auto r = index.find(pending[i].right);
    if (l == index.end() || r == index.end())
      throw TreeError("dangling child id on line " + std::to_string(line_of[i]));
    nodes[i].left = l->second;
    nodes[i].right = r->second;
  }
  const auto rt = index.find(root_id);
  if (rt == index.end()) throw TreeError("root id " + std::to_string(root_id) + " is not defined");
  std::size_t leaves = 0;
  for (const Node& nd : nodes) leaves += nd.is_leaf() ? 1 : 0;
  if (max_vertex != leaves) throw TreeError("leaf vertices must be exactly 1..number of leaves");
  return DecompositionTree(std::move(nodes), rt->second, leaves);
}

std::string write_tree(const DecompositionTree& t) {
  std::string out;
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const auto& nd = t.node(i);
    if (nd.is_leaf())
      out += "leaf " + std::to_string(i) + " " + std::to_string(nd.vertex + 1) + "\n";
    else
      out += "node " + std::to_string(i) + " " + std::to_string(nd.left) + " " + std::to_string(nd.right) + "\n";
  }
  if (!t.nodes().empty()) out += "root " + std::to_string(t.root()) + "\n";
  return out;
}

}  // namespace oddsolve
