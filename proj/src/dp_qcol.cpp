#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>

#include "dp_internal.hpp"
#include "oddsolve/dp.hpp"

namespace oddsolve {

namespace {

// Affine subspace offset + span(basis) of GF(2)^r, r <= kMaxQcolDpRank, in
// canonical form: basis fully reduced with pivots at the lowest set bit,
// sorted by pivot, unused slots zero; offset reduced against the basis.
struct Affine {
  std::uint32_t offset = 0;
  std::uint32_t dim = 0;
  std::array<std::uint32_t, kMaxQcolDpRank> basis{};

  std::uint32_t reduce(std::uint32_t v) const {
    for (std::uint32_t i = 0; i < dim; ++i)
      if ((v >> std::countr_zero(basis[i])) & 1U) v ^= basis[i];
    return v;
  }
  auto tie() const { return std::tie(offset, dim, basis); }
  friend bool operator==(const Affine& a, const Affine& b) { return a.tie() == b.tie(); }
  friend bool operator<(const Affine& a, const Affine& b) { return a.tie() < b.tie(); }
};

Affine make_affine(std::uint32_t particular, const std::vector<std::uint32_t>& span) {
  Affine a;
  for (std::uint32_t v : span) {
    v = a.reduce(v);
    if (v == 0) continue;
    const int p = std::countr_zero(v);
    for (std::uint32_t i = 0; i < a.dim; ++i)
      if ((a.basis[i] >> p) & 1U) a.basis[i] ^= v;
    a.basis[a.dim++] = v;
  }
  std::sort(a.basis.begin(), a.basis.begin() + a.dim,
            [](std::uint32_t x, std::uint32_t y) { return std::countr_zero(x) < std::countr_zero(y); });
  a.offset = a.reduce(particular);
  return a;
}

// One class of a partial coloring: the side code of its set and the affine
// subspace of R' codes under which every member has odd degree.
struct ClassState {
  std::uint32_t code = 0;
  Affine admissible;
  friend bool operator==(const ClassState& a, const ClassState& b) {
    return a.code == b.code && a.admissible == b.admissible;
  }
  friend bool operator<(const ClassState& a, const ClassState& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.admissible < b.admissible;
  }
};

// Classes are unlabelled: a key lists them sorted by (state, set) so that
// relabelings of one coloring coincide.
using Key = std::vector<ClassState>;
using Sets = std::vector<VertexSet>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = k.size();
    auto mix = [&h](std::uint64_t x) { h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const ClassState& c : k) {
      mix((std::uint64_t{c.code} << 32) | c.admissible.offset);
      for (std::uint32_t i = 0; i < c.admissible.dim; ++i) mix(c.admissible.basis[i]);
    }
    return h;
  }
};

using QTable = std::unordered_map<Key, Sets, KeyHash>;

bool sets_less(const Sets& a, const Sets& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (lex_less(a[i], b[i])) return true;
    if (lex_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

void insert(QTable& t, std::vector<std::pair<ClassState, VertexSet>>& classes) {
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (!(x.first == y.first)) return x.first < y.first;
    return lex_less(x.second, y.second);
  });
  Key key;
  Sets sets;
  key.reserve(classes.size());
  sets.reserve(classes.size());
  for (auto& [k, s] : classes) {
    key.push_back(k);
    sets.push_back(std::move(s));
  }
  auto [it, fresh] = t.try_emplace(std::move(key), std::move(sets));
  if (!fresh && sets_less(sets, it->second)) it->second = std::move(sets);
}

// Keep the smaller set tuple per key; the result does not depend on the
// order in which entries arrive.
void merge_into(QTable& dst, QTable&& src) {
  for (auto& [k, s] : src) {
    auto it = dst.find(k);
    if (it == dst.end())
      dst.emplace(k, std::move(s));
    else if (sets_less(s, it->second))
      it->second = std::move(s);
  }
}

// Solutions a in GF(2)^dim of sum_i a_i * images[i] = target, or nullopt.
std::optional<Affine> solve_affine(const std::vector<std::uint32_t>& images, std::uint32_t target) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;  // (image, combination)
  std::vector<std::uint32_t> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::uint32_t v = images[i];
    std::uint32_t comb = 1U << i;
    for (const auto& [img, c] : rows) {
      if ((v >> std::countr_zero(img)) & 1U) {
        v ^= img;
        comb ^= c;
      }
    }
    if (v == 0)
      kernel.push_back(comb);
    else
      rows.emplace_back(v, comb);
  }
  std::uint32_t particular = 0;
  for (const auto& [img, c] : rows) {
    if ((target >> std::countr_zero(img)) & 1U) {
      target ^= img;
      particular ^= c;
    }
  }
  if (target != 0) return std::nullopt;
  return make_affine(particular, kernel);
}

class Joiner {
 public:
  explicit Joiner(const detail::JoinMaps& m) : m_(m) {}

  // Class living only in X: R'_A must map into its admissible set.
  std::optional<ClassState> only_x(const ClassState& x) const {
    std::vector<std::uint32_t> images(m_.ra);
    for (std::size_t i = 0; i < m_.ra; ++i) images[i] = x.admissible.reduce(m_.max[std::size_t{1} << i]);
    auto w = solve_affine(images, x.admissible.offset);
    if (!w) return std::nullopt;
    return ClassState{m_.lxa[x.code], *w};
  }

  std::optional<ClassState> only_y(const ClassState& y) const {
    std::vector<std::uint32_t> images(m_.ra);
    for (std::size_t i = 0; i < m_.ra; ++i) images[i] = y.admissible.reduce(m_.may[std::size_t{1} << i]);
    auto w = solve_affine(images, y.admissible.offset);
    if (!w) return std::nullopt;
    return ClassState{m_.lya[y.code], *w};
  }

  // Class with members on both sides: each side sees the other side's part
  // of the class through the cut, on top of R'_A.
  std::optional<ClassState> both(const ClassState& x, const ClassState& y) const {
    std::vector<std::uint32_t> images(m_.ra);
    for (std::size_t i = 0; i < m_.ra; ++i) {
      const std::size_t e = std::size_t{1} << i;
      images[i] = x.admissible.reduce(m_.max[e]) | (y.admissible.reduce(m_.may[e]) << m_.rx);
    }
    const std::uint32_t tx = x.admissible.reduce(x.admissible.offset ^ m_.myx[y.code]);
    const std::uint32_t ty = y.admissible.reduce(y.admissible.offset ^ m_.mxy[x.code]);
    auto w = solve_affine(images, tx | (ty << m_.rx));
    if (!w) return std::nullopt;
    return ClassState{m_.lxa[x.code] ^ m_.lya[y.code], *w};
  }

 private:
  const detail::JoinMaps& m_;
};

class Combiner {
 public:
  Combiner(const Joiner& j, std::size_t q, const Key& kx, const Sets& sx, const Key& ky, const Sets& sy, QTable& out)
      : j_(j), q_(q), kx_(kx), sx_(sx), ky_(ky), sy_(sy), out_(out), used_(ky.size(), false) {}

  void run() { match(0, ky_.size()); }

 private:
  void match(std::size_t i, std::size_t unused) {
    if (cur_.size() + (kx_.size() - i) + unused > q_ + std::min(kx_.size() - i, unused)) return;
    if (i == kx_.size()) {
      auto classes = cur_;
      for (std::size_t j = 0; j < ky_.size(); ++j) {
        if (used_[j]) continue;
        auto st = j_.only_y(ky_[j]);
        if (!st) return;
        classes.emplace_back(*st, sy_[j]);
      }
      insert(out_, classes);
      return;
    }
    if (auto st = j_.only_x(kx_[i])) {
      cur_.emplace_back(*st, sx_[i]);
      match(i + 1, unused);
      cur_.pop_back();
    }
    for (std::size_t j = 0; j < ky_.size(); ++j) {
      if (used_[j]) continue;
      auto st = j_.both(kx_[i], ky_[j]);
      if (!st) continue;
      used_[j] = true;
      cur_.emplace_back(*st, sx_[i] | sy_[j]);
      match(i + 1, unused - 1);
      cur_.pop_back();
      used_[j] = false;
    }
  }

  const Joiner& j_;
  std::size_t q_;
  const Key& kx_;
  const Sets& sx_;
  const Key& ky_;
  const Sets& sy_;
  QTable& out_;
  std::vector<bool> used_;
  std::vector<std::pair<ClassState, VertexSet>> cur_;
};

QTable join(const QTable& tx, const QTable& ty, const detail::JoinMaps& m, std::size_t q, std::size_t threads) {
  const Joiner joiner(m);
  std::vector<const QTable::value_type*> xs;
  xs.reserve(tx.size());
  for (const auto& e : tx) xs.push_back(&e);
  const std::size_t workers = xs.size() * ty.size() < 256 ? 1 : threads;
  std::vector<QTable> partial(std::max<std::size_t>(1, std::min(workers, xs.size())));
  detail::parallel_blocks(workers, xs.size(), [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& ey : ty)
        Combiner(joiner, q, xs[i]->first, xs[i]->second, ey.first, ey.second, partial[w]).run();
  });
  QTable out = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) merge_into(out, std::move(partial[w]));
  return out;
}

QTable leaf(Vertex u, const CutBasis& cut, std::size_t n) {
  QTable t;
  // An isolated vertex can never have odd degree in its class.
  if (cut.rank() == 0) return t;
  // {u} alone has degree 0, so R' must reach u: the single admissible code is 1.
  t.emplace(Key{ClassState{1, make_affine(1, {})}}, Sets{VertexSet::from_members(n, {u})});
  return t;
}

}  // namespace

std::optional<OddColoring> solve_odd_qcol(const Graph& g, const DecompositionTree& t, std::size_t q,
                                          const DpOptions& opts) {
  check_tree_fits(g, t);
  const std::size_t n = g.order();
  if (n == 0) return OddColoring{};
  if (q == 0) return std::nullopt;
  const std::size_t threads = resolve_threads(opts.threads);
  detail::CutCache cuts(g, t);
  std::vector<std::unique_ptr<QTable>> tables(t.nodes().size());
  for (std::size_t w : t.postorder()) {
    const auto& nd = t.node(w);
    const CutBasis& cut = cuts.compute(w);
    if (cut.rank() > kMaxQcolDpRank)
      throw WidthLimitError("cut rank " + std::to_string(cut.rank()) + " exceeds the supported " +
                            std::to_string(kMaxQcolDpRank) + " for odd coloring");
    if (nd.is_leaf()) {
      tables[w] = std::make_unique<QTable>(leaf(nd.vertex, cut, n));
    } else {
      const auto maps = detail::build_join_maps(g, cuts.get(nd.left), cuts.get(nd.right), cut);
      tables[w] = std::make_unique<QTable>(join(*tables[nd.left], *tables[nd.right], maps, q, threads));
      tables[nd.left].reset();
      tables[nd.right].reset();
      cuts.drop(nd.left);
      cuts.drop(nd.right);
    }
    if (tables[w]->empty()) return std::nullopt;
  }
  // The root cut has rank 0, so every stored class is admissible there;
  // prefer fewer classes, then the smaller set tuple.
  const Sets* best = nullptr;
  for (const auto& [k, s] : *tables[t.root()]) {
    if (best == nullptr || s.size() < best->size() || (s.size() == best->size() && sets_less(s, *best))) best = &s;
  }
  if (best == nullptr) return std::nullopt;
  std::vector<VertexSet> classes = *best;
  std::sort(classes.begin(), classes.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  OddColoring c;
  c.q = static_cast<std::uint32_t>(classes.size());
  c.color.assign(n, 0);
  for (std::uint32_t i = 0; i < classes.size(); ++i) classes[i].for_each([&](std::size_t v) { c.color[v] = i; });
  return c;
}

std::optional<OddColoring> solve_chi_odd(const Graph& g, const DecompositionTree& t, const DpOptions& opts) {
  check_tree_fits(g, t);
  for (const VertexSet& comp : g.components())
    if (comp.count() % 2 == 1) return std::nullopt;
  if (g.order() == 0) return OddColoring{};
  for (std::size_t q = 1; q <= g.order(); ++q)
    if (auto c = solve_odd_qcol(g, t, q, opts)) return c;
  throw std::logic_error("no odd coloring with n classes on a graph with even components");
}

}  // namespace oddsolve
