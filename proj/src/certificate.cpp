#include "oddsolve/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "oddsolve/checks.hpp"

namespace oddsolve {

namespace {

const std::vector<std::string> kSetTags = {"mos", "mes", "odd-ds", "odd-tds", "join-bound"};
const std::vector<std::string> kColorTags = {"odd-qcol", "chi-odd", "odd2col", "even2col",
                                             "gallai-ee", "gallai-oe", "cograph-3col"};

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

VerifyResult fail(std::string msg, std::optional<Vertex> v = std::nullopt) {
  if (v) msg += " at vertex " + std::to_string(*v + 1);
  return {false, std::move(msg), v};
}

std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
  std::size_t pos = 0;
  long long x = -1;
  try {
    x = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || x < 1) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return static_cast<std::size_t>(x);
}

}  // namespace

std::vector<std::string> certificate_tags() {
  std::vector<std::string> out = kSetTags;
  out.insert(out.end(), kColorTags.begin(), kColorTags.end());
  out.push_back("odd-orient");
  return out;
}

Certificate set_certificate(std::string_view problem, const VertexSet& s) {
  Certificate c;
  c.problem = problem;
  c.value = s.count();
  c.sets.push_back(s.members());
  return c;
}

Certificate coloring_certificate(std::string_view problem, const std::vector<std::uint32_t>& color) {
  Certificate c;
  c.problem = problem;
  std::vector<bool> used;
  for (Vertex v = 0; v < color.size(); ++v) {
    c.colors.emplace_back(v, color[v]);
    if (color[v] >= used.size()) used.resize(color[v] + 1, false);
    used[color[v]] = true;
  }
  c.value = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  return c;
}

Certificate orientation_certificate(const Orientation& o) {
  Certificate c;
  c.problem = "odd-orient";
  c.value = o.arcs.size();
  c.arcs = o.arcs;
  return c;
}

std::string write_certificate(const Certificate& c) {
  std::string out = "problem " + c.problem + "\n";
  if (c.value) out += "value " + std::to_string(*c.value) + "\n";
  for (const auto& s : c.sets) {
    out += "set";
    for (Vertex v : s) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (const auto& [v, k] : c.colors) out += "color " + std::to_string(v + 1) + " " + std::to_string(k + 1) + "\n";
  for (const Edge& a : c.arcs) out += "orient " + std::to_string(a.u + 1) + " " + std::to_string(a.v + 1) + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  Certificate c;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (key == "problem") {
      if (toks.size() != 1) throw ParseError(lineno, "expected 'problem <tag>'");
      c.problem = toks[0];
    } else if (key == "value") {
      if (toks.size() != 1) throw ParseError(lineno, "expected 'value <v>'");
      std::size_t pos = 0;
      long long v = -1;
      try {
        v = std::stoll(toks[0], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != toks[0].size() || v < 0) throw ParseError(lineno, "bad value '" + toks[0] + "'");
      c.value = static_cast<std::size_t>(v);
    } else if (key == "set") {
      std::vector<Vertex> s;
      for (const auto& t : toks) s.push_back(parse_index(t, lineno, "vertex") - 1);
      c.sets.push_back(std::move(s));
    } else if (key == "color") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'color <vertex> <class>'");
      c.colors.emplace_back(parse_index(toks[0], lineno, "vertex") - 1,
                            static_cast<std::uint32_t>(parse_index(toks[1], lineno, "class") - 1));
    } else if (key == "orient") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'orient <tail> <head>'");
      c.arcs.push_back({parse_index(toks[0], lineno, "vertex") - 1, parse_index(toks[1], lineno, "vertex") - 1});
    } else {
      throw ParseError(lineno, "unknown certificate line '" + key + "'");
    }
  }
  return c;
}

namespace {

VerifyResult verify_sets(const Graph& g, const Certificate& c, std::string_view tag) {
  if (c.sets.size() != 1) return fail("expected exactly one 'set' line");
  VertexSet s = g.empty_set();
  for (Vertex v : c.sets[0]) {
    if (v >= g.order()) return fail("vertex " + std::to_string(v + 1) + " out of range");
    if (s.test(v)) return fail("vertex listed twice", v);
    s.set(v);
  }
  std::optional<Vertex> bad;
  const char* what = "";
  if (tag == "mos" || tag == "join-bound") {
    bad = odd_set_violation(g, s);
    what = "even degree inside an odd set";
  } else if (tag == "mes") {
    bad = even_set_violation(g, s);
    what = "odd degree inside an even set";
  } else if (tag == "odd-ds") {
    bad = odd_ds_violation(g, s);
    what = "vertex outside S with an even number of neighbors in S";
  } else {
    bad = odd_tds_violation(g, s);
    what = "even number of neighbors in S";
  }
  if (bad) return fail(what, bad);
  if (c.value && *c.value != s.count())
    return fail("claimed value " + std::to_string(*c.value) + " but the set has " + std::to_string(s.count()) +
                " vertices");
  return {true, "valid " + std::string(tag) + " set of size " + std::to_string(s.count()), std::nullopt};
}

VerifyResult verify_coloring(const Graph& g, const Certificate& c, std::string_view tag) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> color(n, 0);
  std::vector<bool> seen(n, false);
  std::uint32_t q = 0;
  for (const auto& [v, k] : c.colors) {
    if (v >= n) return fail("vertex " + std::to_string(v + 1) + " out of range");
    if (seen[v]) return fail("vertex colored twice", v);
    seen[v] = true;
    color[v] = k;
    q = std::max(q, k + 1);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) return fail("vertex has no color", v);

  std::uint32_t limit = 0;
  if (tag == "odd-qcol" || tag == "chi-odd") {
    if (!c.value) return fail("missing 'value' line");
    limit = static_cast<std::uint32_t>(*c.value);
  } else if (tag == "cograph-3col") {
    limit = 3;
  } else {
    limit = 2;
  }
  for (Vertex v = 0; v < n; ++v)
    if (color[v] >= limit) return fail("class " + std::to_string(color[v] + 1) + " exceeds the limit " + std::to_string(limit), v);

  std::vector<VertexSet> classes(std::max<std::uint32_t>(q, 2), g.empty_set());
  for (Vertex v = 0; v < n; ++v) classes[color[v]].set(v);
  // Class parity per vertex: odd classes everywhere except where noted.
  auto wants_odd = [&](std::uint32_t k) {
    if (tag == "even2col" || tag == "gallai-ee") return false;
    if (tag == "gallai-oe") return k == 0;
    return true;
  };
  for (Vertex v = 0; v < n; ++v) {
    const bool odd = g.odd_into(v, classes[color[v]]);
    if (odd != wants_odd(color[v]))
      return fail(std::string(odd ? "odd" : "even") + " degree inside class " + std::to_string(color[v] + 1), v);
  }
  if ((tag == "odd-qcol" || tag == "chi-odd") && c.value && q > *c.value)
    return fail("more classes than claimed");
  return {true, "valid " + std::string(tag) + " coloring", std::nullopt};
}

VerifyResult verify_orientation(const Graph& g, const Certificate& c) {
  const std::size_t n = g.order();
  Graph oriented(n);
  std::vector<std::size_t> in(n, 0);
  for (const Edge& a : c.arcs) {
    if (a.u >= n || a.v >= n) return fail("arc endpoint out of range");
    if (a.u == a.v || !g.adjacent(a.u, a.v)) return fail("arc is not an edge of the graph", a.v);
    if (!oriented.add_edge(a.u, a.v)) return fail("edge oriented twice", a.v);
    ++in[a.v];
  }
  if (oriented.edge_count() != g.edge_count()) {
    for (const Edge& e : g.edges())
      if (!oriented.adjacent(e.u, e.v)) return fail("edge left unoriented", e.u);
  }
  for (Vertex v = 0; v < n; ++v)
    if (in[v] % 2 == 0) return fail("even in-degree", v);
  return {true, "valid odd orientation", std::nullopt};
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const Certificate& c, std::string_view problem) {
  std::string_view tag = problem.empty() ? std::string_view(c.problem) : problem;
  if (!problem.empty() && !c.problem.empty() && c.problem != problem)
    return fail("certificate is for '" + c.problem + "', not '" + std::string(problem) + "'");
  if (contains(kSetTags, tag)) return verify_sets(g, c, tag);
  if (contains(kColorTags, tag)) return verify_coloring(g, c, tag);
  if (tag == "odd-orient") return verify_orientation(g, c);
  return fail("unknown certificate problem '" + std::string(tag) + "'");
}

}  // namespace oddsolve
