#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace domset {

using Vertex = int;

/// Subset of the vertices 0..universe-1 of some graph, stored as a dense bitset.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  /// Throws std::out_of_range when a member is outside 0..universe-1.
  static VertexSet of(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[word(v)] >> bit(v)) & 1u;
  }
  void insert(Vertex v) { words_[word(v)] |= mask(v); }
  void erase(Vertex v) { words_[word(v)] &= ~mask(v); }

  int size() const;
  bool empty() const { return size() == 0; }

  /// |this ∩ other|; both sets must share a universe.
  int count_common(const VertexSet& other) const;

  VertexSet complement() const;
  std::vector<Vertex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static int bit(Vertex v) { return v & 63; }
  static std::uint64_t mask(Vertex v) { return std::uint64_t{1} << bit(v); }
  void clear_tail();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domset
