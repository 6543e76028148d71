#include "slcs/bisim.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "slcs/errors.hpp"

namespace slcs {

EtaSignature eta_signature(const Model& m, PointIndex x) {
  auto atoms = m.point_atoms(x);
  return {{atoms.begin(), atoms.end()}, forward_closure(m, x), backward_closure(m, x)};
}

namespace {

// every a in `from` has some b in `to` with rel(a, b) (or rel(b, a) when flipped)
bool transfers(const PointRelation& rel, const PointSet& from, const PointSet& to, bool flipped) {
  bool ok = true;
  from.for_each([&](PointIndex a) {
    if (!ok) return;
    bool found = false;
    to.for_each([&](PointIndex b) { found = found || (flipped ? rel.contains(b, a) : rel.contains(a, b)); });
    ok = found;
  });
  return ok;
}

bool same_atoms(const Model& m, PointIndex x, PointIndex y) {
  auto a = m.point_atoms(x), b = m.point_atoms(y);
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// For each point, which blocks its forward / backward closure meets.
std::vector<std::vector<bool>> meets(const Model& m, const Partition& p, bool forward) {
  std::vector<PointSet> classes;
  for (BlockId c = 0; c < p.block_count(); ++c) classes.push_back(p.block(c));
  std::vector<std::vector<bool>> out(m.size(), std::vector<bool>(p.block_count()));
  for (PointIndex x = 0; x < m.size(); ++x) {
    const PointSet cl = forward ? forward_closure(m, x) : backward_closure(m, x);
    for (BlockId c = 0; c < p.block_count(); ++c) out[x][c] = cl.intersects(classes[c]);
  }
  return out;
}

}  // namespace

bool test_support::is_bisimulation_bf(const Model& m, const PointRelation& b, BisimConditions conditions) {
  if (b.size() != m.size()) throw PreconditionError("relation is over a different carrier");
  if (b.empty()) throw PreconditionError("a bisimulation relation must be non-empty");
  for (PointIndex x1 = 0; x1 < m.size(); ++x1) {
    bool ok = true;
    b.related_to(x1).for_each([&](PointIndex x2) {
      if (!ok) return;
      if (!same_atoms(m, x1, x2)) {
        ok = false;
        return;
      }
      if (conditions.forward) {
        const PointSet f1 = forward_closure(m, x1), f2 = forward_closure(m, x2);
        ok = transfers(b, f1, f2, false) && transfers(b, f2, f1, true);
      }
      if (ok && conditions.backward) {
        const PointSet b1 = backward_closure(m, x1), b2 = backward_closure(m, x2);
        ok = transfers(b, b1, b2, false) && transfers(b, b2, b1, true);
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool is_bisimulation_bf(const Model& m, const PointRelation& b) {
  return test_support::is_bisimulation_bf(m, b, {});
}

bool is_bisimulation_eqrel(const Model& m, const Partition& p) {
  if (p.size() != m.size()) throw PreconditionError("partition is over a different carrier");
  const auto fwd = meets(m, p, true);
  const auto bwd = meets(m, p, false);
  for (const auto& members : p.blocks()) {
    const PointIndex rep = members.front();
    for (PointIndex x : members) {
      if (!same_atoms(m, rep, x) || fwd[x] != fwd[rep] || bwd[x] != bwd[rep]) return false;
    }
  }
  return true;
}

bool is_eta_bisimulation(const Model& m, const Partition& p) {
  if (p.size() != m.size()) throw PreconditionError("partition is over a different carrier");
  std::vector<EtaSignature> eta;
  eta.reserve(m.size());
  for (PointIndex x = 0; x < m.size(); ++x) eta.push_back(eta_signature(m, x));
  const auto classes = p.blocks();
  for (const auto& members : classes) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      const EtaSignature& e1 = eta[members[0]];
      const EtaSignature& e2 = eta[members[i]];
      if (e1.atoms != e2.atoms) return false;
      for (const auto& c : classes) {
        const PointSet cset = PointSet::of(m.size(), c);
        if (e1.forward.intersects(cset) != e2.forward.intersects(cset)) return false;
        if (e1.backward.intersects(cset) != e2.backward.intersects(cset)) return false;
      }
    }
  }
  return true;
}

Partition largest_bisimulation(const Model& m) {
  if (m.size() > kLargestBisimulationMaxPoints)
    throw SizeLimitError("largest_bisimulation supports at most " + std::to_string(kLargestBisimulationMaxPoints) +
                         " points");
  std::vector<std::uint32_t> labels(m.size());
  for (PointIndex x = 0; x < m.size(); ++x) labels[x] = m.label_class(x);
  Partition current(labels);

  while (true) {
    const auto fwd = meets(m, current, true);
    const auto bwd = meets(m, current, false);
    std::map<std::tuple<BlockId, std::vector<bool>, std::vector<bool>>, std::uint32_t> split;
    for (PointIndex x = 0; x < m.size(); ++x) {
      auto key = std::make_tuple(current.block_of(x), fwd[x], bwd[x]);
      labels[x] = split.emplace(std::move(key), static_cast<std::uint32_t>(split.size())).first->second;
    }
    Partition next(labels);
    if (next.block_count() == current.block_count()) return next;
    current = std::move(next);
  }
}

}  // namespace slcs
