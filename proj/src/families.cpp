#include <stdexcept>

#include "oddsolve/graph.hpp"

namespace oddsolve {

Graph subdivided_clique(std::size_t n, bool keep_clique_edges) {
  Graph g(n + n * (n - 1) / 2);
  std::size_t s = n;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++s) {
      g.add_edge(i, s);
      g.add_edge(s, j);
      if (keep_clique_edges) g.add_edge(i, j);
    }
  return g;
}

std::vector<std::string> family_names() {
  return {"k222", "c5plus", "kn-subdivided", "hn-split", "path", "cycle", "clique", "star"};
}

Graph gen_family(std::string_view name, std::size_t n) {
  if (name == "k222") {
    Graph g(6);
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = u + 1; v < 6; ++v)
        if (u / 2 != v / 2) g.add_edge(u, v);
    return g;
  }
  if (name == "c5plus") {
    Graph g(5);
    for (Vertex v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
    g.add_edge(0, 2);
    return g;
  }
  if (name == "kn-subdivided" || name == "hn-split") {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument(std::string(name) + " needs a positive even n");
    return subdivided_clique(n, name == "hn-split");
  }
  if (name == "path") {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  if (name == "cycle") {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
  }
  if (name == "clique") {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "star") {
    if (n == 0) throw std::invalid_argument("star needs n >= 1");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace oddsolve
