#include "conncert/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "conncert/error.hpp"

namespace conncert {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(std::max<std::size_t>(1, word_count(universe)), 0) {
  if (universe < 0) throw Error(ErrorCode::OutOfRange, "negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw Error(ErrorCode::OutOfRange, "from_mask needs universe <= 64");
  VertexSet s(universe);
  s.words_[0] = mask;
  s.trim();
  return s;
}

VertexSet VertexSet::from_members(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw Error(ErrorCode::OutOfRange, "mask() needs universe <= 64");
  return words_[0];
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

void VertexSet::trim() noexcept {
  const int tail = universe_ & 63;
  if (universe_ == 0) {
    words_.assign(1, 0);
  } else if (tail != 0) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

}  // namespace conncert
