#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

#include "oddsolve/graph.hpp"
#include "oddsolve/rankdec.hpp"

namespace oddsolve::detail {

/// Linear maps between the codes of a node A and its children X, Y. Codes
/// are bit masks over the corresponding basis; every map is tabulated over
/// its whole domain.
struct JoinMaps {
  std::size_t rx = 0, ry = 0, ra = 0;
  std::vector<std::uint32_t> lxa;  ///< side code of X -> side code of A
  std::vector<std::uint32_t> lya;
  std::vector<std::uint32_t> mxy;  ///< side code of X -> other code of Y
  std::vector<std::uint32_t> myx;
  std::vector<std::uint32_t> max;  ///< other code of A -> other code of X
  std::vector<std::uint32_t> may;
};

JoinMaps build_join_maps(const Graph& g, const CutBasis& x, const CutBasis& y, const CutBasis& a);

/// Walks the tree children-first, keeping cut data only for nodes whose
/// parent has not been processed yet.
class CutCache {
 public:
  CutCache(const Graph& g, const DecompositionTree& t);
  const CutBasis& compute(std::size_t node);
  const CutBasis& get(std::size_t node) const { return *cuts_[node]; }
  void drop(std::size_t node) { cuts_[node].reset(); }

 private:
  const Graph& g_;
  std::vector<VertexSet> sets_;
  std::vector<std::unique_ptr<CutBasis>> cuts_;
};

/// Runs body(worker, begin, end) over [0, total) split into contiguous
/// blocks, one per worker.
template <typename F>
void parallel_blocks(std::size_t threads, std::size_t total, F&& body) {
  if (threads <= 1 || total < 2) {
    body(std::size_t{0}, std::size_t{0}, total);
    return;
  }
  const std::size_t workers = std::min(threads, total);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t b = std::min(total, w * chunk);
    const std::size_t e = std::min(total, b + chunk);
    pool.emplace_back([&body, w, b, e] { body(w, b, e); });
  }
  body(std::size_t{0}, std::size_t{0}, std::min(total, chunk));
  for (auto& th : pool) th.join();
}

}  // namespace oddsolve::detail
