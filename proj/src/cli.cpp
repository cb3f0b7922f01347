#include "oddsolve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "oddsolve/certificate.hpp"
#include "oddsolve/dp.hpp"
#include "oddsolve/graph.hpp"
#include "oddsolve/oracle.hpp"
#include "oddsolve/parity.hpp"
#include "oddsolve/rankdec.hpp"
#include "oddsolve/reductions.hpp"

namespace oddsolve::cli {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct RunConfig {
  std::string problem;
  std::string graph;
  std::string dec;
  std::string cnf;
  std::string certificate;
  std::string emit;
  std::string out;
  std::string method = "caterpillar-bfs";
  std::string family;
  std::string op;
  std::vector<std::size_t> v1;
  std::size_t q = 0;
  std::size_t p = 88;
  std::size_t k = 4;
  std::size_t n = 0;
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  std::uint64_t num = 1;
  std::uint64_t den = 2;
  bool relaxed = false;
};

std::string members(const VertexSet& s) {
  std::string out;
  s.for_each([&](std::size_t v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  });
  return out;
}

std::string colors(const std::vector<std::uint32_t>& c) {
  std::string out;
  for (std::uint32_t k : c) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k + 1);
  }
  return out;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int solve(bool oracle);
  int poly();
  int decompose();
  int gen_family();
  int gen_reduce(const std::string& which);
  int gen_random();
  int gen_sat23();
  int verify();

 private:
  Graph load_graph() {
    std::vector<std::string> warnings;
    Graph g = read_dimacs_file(cfg_.graph, &warnings);
    for (const auto& w : warnings) err_ << "warning: " << w << "\n";
    return g;
  }

  DecompositionTree load_tree(const Graph& g) {
    if (!cfg_.dec.empty()) return parse_tree(read_text_file(cfg_.dec));
    const auto order = heuristic_order(g, OrderMethod::Bfs);
    return caterpillar(g.order(), order);
  }

  void emit(const Certificate& c) {
    if (cfg_.emit.empty()) return;
    write_text_file(cfg_.emit, write_certificate(c));
  }

  // Writes `doc` to --out, or after the result line when no path is given.
  void document(const std::string& doc) {
    if (cfg_.out.empty())
      out_ << doc;
    else
      write_text_file(cfg_.out, doc);
  }

  int set_result(const SetResult& r) {
    if (!r.feasible) {
      out_ << "value=none feasible=false\n" << detail_;
      return kNegative;
    }
    out_ << "value=" << r.value << " feasible=true\n" << detail_ << "set=" << members(r.set) << "\n";
    emit(set_certificate(cfg_.problem, r.set));
    return kOk;
  }

  int coloring_result(const std::optional<OddColoring>& c) {
    if (!c) {
      out_ << "value=none feasible=false\n" << detail_;
      return kNegative;
    }
    Certificate cert = coloring_certificate(cfg_.problem, c->color);
    out_ << "value=" << *cert.value << " feasible=true\n" << detail_ << "color=" << colors(c->color) << "\n";
    emit(cert);
    return kOk;
  }

  int undefined_chi(const Graph& g) {
    for (const VertexSet& comp : g.components()) {
      if (comp.count() % 2 == 1) {
        out_ << "value=undefined feasible=false\n"
             << detail_ << "reason=odd-order component containing vertex " << comp.first() + 1 << "\n";
        return kNegative;
      }
    }
    throw InternalError("odd chromatic number reported undefined for a graph with even components");
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::string detail_;
};

int Runner::solve(bool oracle) {
  const Graph g = load_graph();
  if (cfg_.problem == "odd-qcol" && cfg_.q == 0) throw std::invalid_argument("odd-qcol needs --q >= 1");
  std::optional<DecompositionTree> t;
  if (!oracle) {
    t = load_tree(g);
    check_tree_fits(g, *t);
    detail_ = "width=" + std::to_string(width(g, *t)) + " tree=" + (cfg_.dec.empty() ? "caterpillar-bfs" : "file") + "\n";
  }
  DpOptions opts;
  opts.threads = cfg_.threads;
  if (auto sp = parse_set_problem(cfg_.problem)) {
    return set_result(oracle ? oracle_set_problem(*sp, g) : solve_set_problem(*sp, g, *t, opts));
  }
  if (cfg_.problem == "odd-qcol") {
    return coloring_result(oracle ? oracle_odd_qcol(g, cfg_.q) : solve_odd_qcol(g, *t, cfg_.q, opts));
  }
  // chi-odd
  if (oracle) {
    const OracleChi r = oracle_chi_odd(g, g.order());
    if (r.status == OracleChi::Status::Undefined) return undefined_chi(g);
    if (r.status == OracleChi::Status::AboveLimit) throw InternalError("no odd coloring found with n classes");
    return coloring_result(r.coloring);
  }
  auto c = solve_chi_odd(g, *t, opts);
  if (!c) return undefined_chi(g);
  return coloring_result(c);
}

int Runner::poly() {
  const Graph g = load_graph();
  const std::string& op = cfg_.op;
  auto two = [&](const TwoColoring& c) {
    std::vector<std::uint32_t> col(c.color.begin(), c.color.end());
    Certificate cert = coloring_certificate(op, col);
    out_ << "value=" << *cert.value << " feasible=true\n"
         << "class1=" << members(c.color_class(g.order(), 0)) << "\n"
         << "class2=" << members(c.color_class(g.order(), 1)) << "\n";
    emit(cert);
    return kOk;
  };
  auto bipartition = [&](const Bipartition& b) {
    std::vector<std::uint32_t> col(g.order(), 0);
    b.b.for_each([&](std::size_t v) { col[v] = 1; });
    Certificate cert = coloring_certificate(op, col);
    cert.value = b.a.count();
    out_ << "value=" << b.a.count() << " feasible=true\n"
         << "a=" << members(b.a) << "\n"
         << "b=" << members(b.b) << "\n";
    emit(cert);
    return kOk;
  };
  if (op == "odd2col") {
    auto c = odd_two_coloring(g);
    if (!c) {
      out_ << "value=none feasible=false\n";
      return kNegative;
    }
    return two(*c);
  }
  if (op == "even2col") return two(even_two_coloring(g));
  if (op == "gallai-oe") return bipartition(gallai_odd_even(g));
  if (op == "gallai-ee") return bipartition(gallai_even_even(g));
  if (op == "odd-orient") {
    auto r = odd_orientation(g);
    if (auto* fail = std::get_if<OrientationFailure>(&r)) {
      out_ << "value=none feasible=false\n"
           << "reason=component containing vertex " << fail->component.first() + 1 << " has |V|+|E| odd\n";
      return kNegative;
    }
    const Orientation& o = std::get<Orientation>(r);
    out_ << "value=" << o.arcs.size() << " feasible=true\n";
    for (const Edge& a : o.arcs) out_ << "arc=" << a.u + 1 << " " << a.v + 1 << "\n";
    emit(orientation_certificate(o));
    return kOk;
  }
  if (op == "join-bound") {
    std::pair<VertexSet, VertexSet> parts;
    if (cfg_.v1.empty()) {
      auto j = find_join(g);
      if (!j) {
        out_ << "value=none feasible=false\nreason=graph has no join\n";
        return kNegative;
      }
      parts = std::move(*j);
    } else {
      parts.first = g.empty_set();
      for (std::size_t v : cfg_.v1) {
        if (v == 0 || v > g.order()) throw std::invalid_argument("--v1 vertex out of range");
        parts.first.set(v - 1);
      }
      parts.second = parts.first.complement();
    }
    const JoinBound jb = join_bound_subgraph(g, parts.first, parts.second);
    out_ << "value=" << jb.odd_subgraph.count() << " feasible=true\n"
         << "case=" << jb.case_id << " bound=" << join_bound_value(g.order()) << "\n"
         << "set=" << members(jb.odd_subgraph) << "\n";
    if (jb.coloring) out_ << "color=" << colors(jb.coloring->color) << "\n";
    emit(set_certificate("join-bound", jb.odd_subgraph));
    return kOk;
  }
  // cograph-3col
  auto r = cograph_odd_3_coloring(g);
  if (std::holds_alternative<NotCograph>(r)) {
    out_ << "value=none feasible=false\nreason=not a cograph\n";
    return kNegative;
  }
  if (auto* odd = std::get_if<OddComponent>(&r)) {
    out_ << "value=none feasible=false\nreason=odd-order component containing vertex " << odd->component.first() + 1
         << "\n";
    return kNegative;
  }
  const OddColoring& c = std::get<OddColoring>(r);
  Certificate cert = coloring_certificate(op, c.color);
  out_ << "value=" << *cert.value << " feasible=true\ncolor=" << colors(c.color) << "\n";
  emit(cert);
  return kOk;
}

int Runner::decompose() {
  const Graph g = load_graph();
  DecompositionTree t = cfg_.method == "optimal-linear"
                            ? optimal_linear(g)
                            : caterpillar(g.order(), heuristic_order(g, cfg_.method == "caterpillar-degree"
                                                                            ? OrderMethod::Degree
                                                                            : OrderMethod::Bfs));
  out_ << "value=" << width(g, t) << " feasible=true\nmethod=" << cfg_.method << "\n";
  document(write_tree(t));
  return kOk;
}

int Runner::gen_family() {
  const Graph g = oddsolve::gen_family(cfg_.family, cfg_.n);
  out_ << "value=" << g.order() << " feasible=true\nedges=" << g.edge_count() << "\n";
  document(write_dimacs(g));
  return kOk;
}

int Runner::gen_reduce(const std::string& which) {
  if (which == "mes") {
    const Cnf23 f = parse_cnf(read_text_file(cfg_.cnf));
    const MesInstance inst = gen_mes_instance(f, cfg_.p, cfg_.relaxed);
    out_ << "value=" << inst.graph.order() << " feasible=true\nthreshold=" << inst.threshold << "\n";
    for (const auto& flag : inst.flags) out_ << "flag=" << flag << "\n";
    document(write_dimacs(inst.graph));
    return kOk;
  }
  const Graph g = load_graph();
  if (which == "mos") {
    const MosInstance inst = gen_mos_instance(g, cfg_.k);
    out_ << "value=" << inst.graph.order() << " feasible=true\nhub=" << inst.hub + 1 << " target=" << 2 * cfg_.k + 1
         << "\n";
    document(write_dimacs(inst.graph));
    return kOk;
  }
  const QcolInstance inst = gen_qcol_instance(g);
  out_ << "value=" << inst.subdivided.order() << " feasible=true\nfixed-order=" << inst.fixed.order() << "\n";
  document(write_dimacs(inst.subdivided));
  return kOk;
}

int Runner::gen_random() {
  const Graph g = random_graph(cfg_.n, cfg_.num, cfg_.den, cfg_.seed);
  out_ << "value=" << g.order() << " feasible=true\nedges=" << g.edge_count() << "\n";
  document(write_dimacs(g));
  return kOk;
}

int Runner::gen_sat23() {
  const PlantedFormula pf = planted_2in3_sat3(cfg_.n, cfg_.seed);
  std::string planted = "planted";
  for (std::size_t v = 0; v < pf.assignment.size(); ++v)
    planted += " " + std::string(pf.assignment[v] ? "" : "-") + std::to_string(v + 1);
  out_ << "value=" << pf.formula.num_vars << " feasible=true\nclauses=" << pf.formula.clauses.size() << "\n";
  document(write_cnf(pf.formula, planted));
  return kOk;
}

int Runner::verify() {
  const Graph g = load_graph();
  const Certificate c = parse_certificate(read_text_file(cfg_.certificate));
  const VerifyResult r = verify_certificate(g, c, cfg_.problem);
  if (!r.ok) {
    out_ << "value=invalid feasible=false\n";
    if (r.vertex) out_ << "violated=" << *r.vertex + 1 << "\n";
    err_ << "error: " << r.message << "\n";
    return kError;
  }
  out_ << "value=" << (c.value ? std::to_string(*c.value) : std::string("none")) << " feasible=true\n"
       << "verified=" << r.message << "\n";
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for parity-constrained induced subgraph problems"};
  app.name("oddsolve");
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> problems = {"mos", "mes", "odd-ds", "odd-tds", "odd-qcol", "chi-odd"};
  auto add_problem_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("problem", cfg.problem, "Problem")->required()->check(CLI::IsMember(problems));
    c->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
    c->add_option("--q", cfg.q, "Number of classes for odd-qcol");
    c->add_option("--emit-certificate", cfg.emit, "Write a certificate here");
    return c;
  };
  CLI::App* solve = add_problem_cmd("solve", "Solve by dynamic programming over a decomposition tree");
  solve->add_option("--dec", cfg.dec, "Decomposition tree file (default: BFS caterpillar)");
  solve->add_option("--threads", cfg.threads, "Worker threads (default: ODDSOLVE_THREADS or all cores)");
  CLI::App* oracle = add_problem_cmd("oracle", "Solve by exhaustive search (small graphs only)");

  CLI::App* poly = app.add_subcommand("poly", "Polynomial-time parity algorithms");
  poly->add_option("op", cfg.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"odd2col", "even2col", "gallai-ee", "gallai-oe", "odd-orient", "join-bound", "cograph-3col"}));
  poly->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
  poly->add_option("--v1", cfg.v1, "First side of the join (1-indexed), for join-bound");
  poly->add_option("--emit-certificate", cfg.emit, "Write a certificate here");

  CLI::App* decompose = app.add_subcommand("decompose", "Build a decomposition tree");
  decompose->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
  decompose->add_option("--method", cfg.method, "Construction method")
      ->check(CLI::IsMember({"caterpillar-bfs", "caterpillar-degree", "optimal-linear"}));
  decompose->add_option("--out", cfg.out, "Output file (default: stdout)");

  CLI::App* gen = app.add_subcommand("gen", "Generate graphs and reduction instances");
  gen->require_subcommand(1);
  CLI::App* family = gen->add_subcommand("family", "Named graph family");
  family->add_option("name", cfg.family, "Family")->required()->check(CLI::IsMember(family_names()));
  family->add_option("--n", cfg.n, "Size parameter");
  family->add_option("--out", cfg.out, "Output file (default: stdout)");
  CLI::App* reduce = gen->add_subcommand("reduce", "Hardness reduction instance");
  reduce->require_subcommand(1);
  CLI::App* rmes = reduce->add_subcommand("mes", "Even subgraph gadget from a 2in3-SAT3 formula");
  rmes->add_option("--cnf", cfg.cnf, "DIMACS cnf file")->required();
  rmes->add_option("--p", cfg.p, "Even path length (default 88)");
  rmes->add_flag("--relaxed", cfg.relaxed, "Only require three distinct variables per clause");
  rmes->add_option("--out", cfg.out, "Output file (default: stdout)");
  CLI::App* rmos = reduce->add_subcommand("mos", "Odd subgraph instance via the wheel construction");
  rmos->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
  rmos->add_option("--k", cfg.k, "Even k >= 4")->required();
  rmos->add_option("--out", cfg.out, "Output file (default: stdout)");
  CLI::App* rqcol = reduce->add_subcommand("qcol", "Odd coloring instance from proper coloring");
  rqcol->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
  rqcol->add_option("--out", cfg.out, "Output file (default: stdout)");
  CLI::App* random = gen->add_subcommand("random", "Random graph G(n, num/den)");
  random->add_option("--n", cfg.n, "Vertices")->required();
  random->add_option("--num", cfg.num, "Edge probability numerator (default 1)");
  random->add_option("--den", cfg.den, "Edge probability denominator (default 2)");
  random->add_option("--seed", cfg.seed, "Seed");
  random->add_option("--out", cfg.out, "Output file (default: stdout)");
  CLI::App* sat = gen->add_subcommand("sat23", "Planted 2in3-SAT3 formula");
  sat->add_option("--n", cfg.n, "Variables (>= 3)")->required();
  sat->add_option("--seed", cfg.seed, "Seed");
  sat->add_option("--out", cfg.out, "Output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
  verify->add_option("--graph", cfg.graph, "DIMACS edge file")->required();
  verify->add_option("--certificate", cfg.certificate, "Certificate file")->required();
  verify->add_option("--problem", cfg.problem, "Problem tag (default: the certificate's)")
      ->check(CLI::IsMember(certificate_tags()));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  Runner r(cfg, out, err);
  try {
    if (*solve) return r.solve(false);
    if (*oracle) return r.solve(true);
    if (*poly) return r.poly();
    if (*decompose) return r.decompose();
    if (*verify) return r.verify();
    if (*family) return r.gen_family();
    if (*random) return r.gen_random();
    if (*sat) return r.gen_sat23();
    if (*rmes) return r.gen_reduce("mes");
    if (*rmos) return r.gen_reduce("mos");
    return r.gen_reduce("qcol");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace oddsolve::cli
