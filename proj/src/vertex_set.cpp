#include "domset/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace domset {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative vertex set universe");
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v < 0 || v >= universe)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(universe - 1));
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

int VertexSet::count_common(const VertexSet& other) const {
  int total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & other.words_[i]);
  return total;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void VertexSet::clear_tail() {
  const int rem = universe_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace domset
