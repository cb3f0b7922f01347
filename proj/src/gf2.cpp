#include "oddsolve/gf2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oddsolve::gf2 {

Matrix Matrix::from_rows(std::size_t cols, std::vector<BitVec> rows) {
  Matrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void Matrix::append_row(BitVec r) {
  if (r.size() != cols_) throw std::invalid_argument("row width does not match matrix");
  rows_.push_back(std::move(r));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
  return t;
}

BitVec Matrix::multiply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector width does not match matrix");
  BitVec out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(x));
  return out;
}

namespace {

// Incremental Gauss-Jordan state: every stored vector has a pivot (its lowest
// set bit) that is clear in all the other stored vectors.
struct Eliminator {
  std::vector<BitVec> vecs;
  std::vector<std::size_t> pivots;
  std::vector<BitVec> combos;
  std::size_t combo_width;

  explicit Eliminator(std::size_t width) : combo_width(width) {}

  void reduce(BitVec& r, BitVec& c) const {
    for (std::size_t k = 0; k < vecs.size(); ++k)
      if (r.test(pivots[k])) {
        r ^= vecs[k];
        c ^= combos[k];
      }
  }

  /// Adds r (already reduced) with combination c; returns its pivot.
  std::size_t insert(BitVec r, BitVec c) {
    const std::size_t p = r.first();
    for (std::size_t k = 0; k < vecs.size(); ++k)
      if (vecs[k].test(p)) {
        vecs[k] ^= r;
        combos[k] ^= c;
      }
    vecs.push_back(std::move(r));
    pivots.push_back(p);
    combos.push_back(std::move(c));
    return p;
  }
};

}  // namespace

RrefDecomposition rref(const Matrix& m) {
  const std::size_t max_rank = std::min(m.rows(), m.cols());
  Eliminator el(max_rank);
  RrefDecomposition d;
  for (std::size_t i = 0; i < m.rows() && el.vecs.size() < max_rank; ++i) {
    BitVec r = m.row(i);
    BitVec c(max_rank);
    el.reduce(r, c);
    if (r.none()) continue;
    c.set(d.basis_row_indices.size());
    d.basis_row_indices.push_back(i);
    el.insert(std::move(r), std::move(c));
  }
  const std::size_t rk = el.vecs.size();
  std::vector<std::size_t> order(rk);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return el.pivots[a] < el.pivots[b]; });
  d.rref = Matrix(0, m.cols());
  for (std::size_t k : order) {
    d.rref.append_row(el.vecs[k]);
    d.pivot_cols.push_back(el.pivots[k]);
    BitVec c(rk);
    el.combos[k].for_each([&](std::size_t s) { c.set(s); });
    d.combos.push_back(std::move(c));
  }
  return d;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<BitVec> solve(const Matrix& a, const BitVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const std::size_t n = a.cols();
  Eliminator el(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BitVec r(n + 1);
    a.row(i).for_each([&](std::size_t j) { r.set(j); });
    r.set(n, b.test(i));
    BitVec unused(0);
    el.reduce(r, unused);
    if (r.none()) continue;
    if (r.first() == n) return std::nullopt;
    el.insert(std::move(r), BitVec(0));
  }
  BitVec x(n);
  for (std::size_t k = 0; k < el.vecs.size(); ++k) x.set(el.pivots[k], el.vecs[k].test(n));
  return x;
}

std::optional<BitVec> coordinates(const RrefDecomposition& d, const BitVec& v) {
  if (v.size() != d.rref.cols()) throw std::invalid_argument("coordinates: vector has wrong width");
  BitVec r = v;
  BitVec c(d.rank());
  for (std::size_t k = 0; k < d.rank(); ++k)
    if (r.test(d.pivot_cols[k])) {
      r ^= d.rref.row(k);
      c ^= d.combos[k];
    }
  if (r.any()) return std::nullopt;
  return c;
}

BitVec reconstruct(const Matrix& m, const RrefDecomposition& d, const BitVec& coords) {
  BitVec out(m.cols());
  coords.for_each([&](std::size_t k) { out ^= m.row(d.basis_row_indices[k]); });
  return out;
}

}  // namespace oddsolve::gf2
