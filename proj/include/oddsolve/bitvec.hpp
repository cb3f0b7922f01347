#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "oddsolve/kernels.hpp"

namespace oddsolve {

/// Fixed-length bit sequence over GF(2). Doubles as the characteristic vector
/// of a vertex set. Bits past size() are always zero.
class BitVec {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static BitVec from_members(std::size_t nbits, std::span<const std::size_t> members) {
    BitVec v(nbits);
    for (std::size_t m : members) v.set(m);
    return v;
  }
  static BitVec from_members(std::size_t nbits, std::initializer_list<std::size_t> members) {
    return from_members(nbits, std::span<const std::size_t>(members.begin(), members.size()));
  }
  static BitVec full(std::size_t nbits) {
    BitVec v(nbits);
    for (auto& w : v.words_) w = ~Word{0};
    v.clear_tail();
    return v;
  }

  static constexpr std::size_t word_count(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  BitVec& operator^=(const BitVec& o) {
    check_width(o);
    kernels::active().xor_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_width(o);
    kernels::active().or_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this := this \ o
  BitVec& subtract(const BitVec& o) {
    check_width(o);
    kernels::active().and_not_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  BitVec complement() const {
    BitVec v(*this);
    for (auto& w : v.words_) w = ~w;
    v.clear_tail();
    return v;
  }

  std::size_t count() const { return kernels::active().popcount(words_.data(), words_.size()); }
  /// |this ∩ o|
  std::size_t and_count(const BitVec& o) const {
    check_width(o);
    return kernels::active().and_popcount(words_.data(), o.words_.data(), words_.size());
  }
  /// Parity of |this ∩ o|; the GF(2) inner product.
  bool dot(const BitVec& o) const { return (and_count(o) & 1U) != 0; }
  bool any() const { return kernels::active().any(words_.data(), words_.size()); }
  bool none() const { return !any(); }

  std::size_t first() const { return next(0); }
  /// Smallest set index >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= nbits_) return npos;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.nbits_ == b.nbits_ &&
           kernels::active().equal(a.words_.data(), b.words_.data(), a.words_.size());
  }

  /// Lexicographic order on the sorted member lists; for sets of equal size
  /// the smaller set is the one holding the lowest index where they differ.
  friend bool lex_less(const BitVec& a, const BitVec& b) {
    std::size_t i = 0, j = 0;
    while (true) {
      i = a.next(i);
      j = b.next(j);
      if (i == npos || j == npos) return i == npos && j != npos;
      if (i != j) return i < j;
      ++i;
      ++j;
    }
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::size_t hash() const {
    std::size_t h = nbits_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_width(const BitVec& o) const {
    if (o.nbits_ != nbits_) throw std::invalid_argument("BitVec width mismatch");
  }
  void clear_tail() {
    if (nbits_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace oddsolve
