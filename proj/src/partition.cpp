#include "slcs/partition.hpp"

#include <unordered_map>

namespace slcs {

Partition::Partition(std::span<const std::uint32_t> labels) {
  std::unordered_map<std::uint32_t, BlockId> renumber;
  block_of_.reserve(labels.size());
  for (auto l : labels) {
    auto [it, inserted] = renumber.emplace(l, static_cast<BlockId>(renumber.size()));
    block_of_.push_back(it->second);
  }
  block_count_ = renumber.size();
}

Partition Partition::from_canonical(std::vector<BlockId> block_of, std::size_t block_count) {
  Partition p;
  p.block_of_ = std::move(block_of);
  p.block_count_ = block_count;
  return p;
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::uint32_t> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<std::uint32_t>(i);
  return Partition(l);
}

Partition Partition::trivial(std::size_t n) {
  std::vector<std::uint32_t> l(n, 0);
  return Partition(l);
}

PointSet Partition::block(BlockId b) const {
  PointSet s(size());
  for (PointIndex x = 0; x < size(); ++x)
    if (block_of_[x] == b) s.insert(x);
  return s;
}

std::vector<std::vector<PointIndex>> Partition::blocks() const {
  std::vector<std::vector<PointIndex>> out(block_count_);
  for (PointIndex x = 0; x < size(); ++x) out[block_of_[x]].push_back(x);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::int64_t> image(block_count_, -1);
  for (PointIndex x = 0; x < size(); ++x) {
    auto& slot = image[block_of_[x]];
    if (slot < 0) slot = coarser.block_of_[x];
    else if (slot != coarser.block_of_[x]) return false;
  }
  return true;
}

PointRelation PointRelation::of_partition(const Partition& p) {
  PointRelation r(p.size());
  for (const auto& members : p.blocks())
    for (PointIndex x : members)
      for (PointIndex y : members) r.insert(x, y);
  return r;
}

PointRelation PointRelation::identity(std::size_t n) {
  PointRelation r(n);
  for (PointIndex x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

PointRelation PointRelation::reflexive_symmetric_closure(
    std::size_t n, std::span<const std::pair<PointIndex, PointIndex>> pairs) {
  PointRelation r = identity(n);
  for (auto [x, y] : pairs) {
    r.insert(x, y);
    r.insert(y, x);
  }
  return r;
}

bool PointRelation::empty() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool PointRelation::is_reflexive() const {
  for (PointIndex x = 0; x < size(); ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool PointRelation::is_symmetric() const {
  for (PointIndex x = 0; x < size(); ++x) {
    bool ok = true;
    rows_[x].for_each([&](PointIndex y) { ok = ok && contains(y, x); });
    if (!ok) return false;
  }
  return true;
}

bool PointRelation::is_transitive() const {
  for (PointIndex x = 0; x < size(); ++x) {
    bool ok = true;
    rows_[x].for_each([&](PointIndex y) { ok = ok && rows_[y].is_subset_of(rows_[x]); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace slcs
