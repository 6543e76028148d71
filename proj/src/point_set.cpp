#include "slcs/point_set.hpp"

#include <bit>
#include <cassert>

namespace slcs {

PointSet::PointSet(std::size_t carrier_size, bool filled)
    : size_(carrier_size), words_((carrier_size + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
  trim();
}

PointSet PointSet::of(std::size_t carrier_size, std::span<const PointIndex> members) {
  PointSet s(carrier_size);
  for (PointIndex x : members) {
    assert(x < carrier_size);
    s.insert(x);
  }
  return s;
}

void PointSet::trim() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

PointSet PointSet::complement() const {
  PointSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<PointIndex> PointSet::members() const {
  std::vector<PointIndex> out;
  out.reserve(count());
  for_each([&](PointIndex x) { out.push_back(x); });
  return out;
}

}  // namespace slcs
