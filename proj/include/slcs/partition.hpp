#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "slcs/point_set.hpp"

namespace slcs {

using BlockId = std::uint32_t;

/// Surjective map from points to dense block ids. Ids are always in
/// canonical form: numbered 0, 1, ... by first occurrence in point-index
/// order, so two partitions have the same kernel iff they compare equal.
class Partition {
public:
  Partition() = default;
  /// Any labelling; it is renumbered canonically.
  explicit Partition(std::span<const std::uint32_t> labels);

  /// Takes an assignment that is already canonical without renumbering.
  static Partition from_canonical(std::vector<BlockId> block_of, std::size_t block_count);

  static Partition discrete(std::size_t n);
  static Partition trivial(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return block_count_; }
  BlockId block_of(PointIndex x) const { return block_of_[x]; }
  std::span<const BlockId> assignment() const { return block_of_; }

  PointSet block(BlockId b) const;
  std::vector<std::vector<PointIndex>> blocks() const;
  bool same_block(PointIndex x, PointIndex y) const { return block_of_[x] == block_of_[y]; }

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<BlockId> block_of_;
  std::size_t block_count_ = 0;
};

/// Binary relation over the points of one model, stored row-wise.
class PointRelation {
public:
  explicit PointRelation(std::size_t n) : rows_(n, PointSet(n)) {}

  static PointRelation of_partition(const Partition& p);
  static PointRelation identity(std::size_t n);
  /// Smallest reflexive and symmetric relation containing `pairs`.
  static PointRelation reflexive_symmetric_closure(std::size_t n,
                                                   std::span<const std::pair<PointIndex, PointIndex>> pairs);

  std::size_t size() const { return rows_.size(); }
  bool contains(PointIndex x, PointIndex y) const { return rows_[x].contains(y); }
  void insert(PointIndex x, PointIndex y) { rows_[x].insert(y); }
  const PointSet& related_to(PointIndex x) const { return rows_[x]; }
  bool empty() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

private:
  std::vector<PointSet> rows_;
};

}  // namespace slcs
