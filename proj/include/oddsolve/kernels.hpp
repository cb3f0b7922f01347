#pragma once

// Word-level GF(2) kernels. Every routine has a portable scalar reference
// implementation and, on x86-64, an AVX2 variant; the active table is chosen
// once at startup from the CPU feature bits.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace oddsolve::kernels {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  void (*and_not_into)(Word* dst, const Word* src, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*any)(const Word* a, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2();

/// The table used by BitVec. Honors ODDSOLVE_SIMD=scalar to force the
/// reference path.
const KernelTable& active();

}  // namespace oddsolve::kernels
