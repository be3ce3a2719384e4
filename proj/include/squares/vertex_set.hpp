#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "squares/types.hpp"

namespace squares {

// Fixed-universe bitset over vertex ids [0, universe). Binary operations
// require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static VertexSet of(int universe, std::span<const VertexId> members) {
    VertexSet s(universe);
    for (VertexId v : members) s.set(v);
    return s;
  }

  int universe() const { return universe_; }

  void set(VertexId v) { words_[word(v)] |= mask(v); }
  void reset(VertexId v) { words_[word(v)] &= ~mask(v); }
  bool test(VertexId v) const { return (words_[word(v)] & mask(v)) != 0; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest member, or -1 when empty.
  VertexId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<VertexId>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

 private:
  static std::size_t word(VertexId v) { return static_cast<std::size_t>(v) >> 6; }
  static std::uint64_t mask(VertexId v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace squares
