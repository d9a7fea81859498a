#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace conncert {

/// Subset of {0, ..., universe-1}. One machine word covers n <= 64; larger
/// universes grow the word vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet from_members(int universe, const std::vector<int>& members);

  int universe() const noexcept { return universe_; }
  int size() const noexcept;
  bool empty() const noexcept;
  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }

  void insert(int v);
  void erase(int v);

  VertexSet complement() const;
  std::vector<int> members() const;
  /// Lowest member, or -1 when empty.
  int first() const noexcept;
  /// Requires universe <= 64.
  std::uint64_t mask() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool intersects(const VertexSet& other) const noexcept;

 private:
  void trim() noexcept;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace conncert
