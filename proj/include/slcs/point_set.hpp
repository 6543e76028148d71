#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace slcs {

using PointIndex = std::uint32_t;

/// Subset of a carrier {0, ..., size-1}, stored as a packed bit-vector.
///
/// Every set knows the size of its carrier, so complement() is always
/// relative to that carrier. Binary set operations require equal carriers.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::size_t carrier_size, bool filled = false);

  static PointSet of(std::size_t carrier_size, std::span<const PointIndex> members);

  std::size_t carrier_size() const { return size_; }

  bool contains(PointIndex x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(PointIndex x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(PointIndex x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;

  PointSet complement() const;
  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Members in ascending index order.
  std::vector<PointIndex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<PointIndex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace slcs
