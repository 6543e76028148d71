#pragma once

#include <vector>

#include "slcs/model.hpp"
#include "slcs/partition.hpp"

namespace slcs {

/// One-step observation of a point: (V^-1 x, forward closure, backward closure).
struct EtaSignature {
  std::vector<AtomIndex> atoms;
  PointSet forward;
  PointSet backward;
  friend bool operator==(const EtaSignature&, const EtaSignature&) = default;
};

EtaSignature eta_signature(const Model& m, PointIndex x);

/// Back-and-forth bisimulation check on an arbitrary relation: for every
/// related pair, equal atoms plus forward and backward transfer in both
/// directions. Throws PreconditionError on an empty relation.
bool is_bisimulation_bf(const Model& m, const PointRelation& b);

/// Bisimulation check on an equivalence given as a partition: equal atoms
/// within blocks, and forward (resp. backward) closures of related points
/// meet the same blocks.
bool is_bisimulation_eqrel(const Model& m, const Partition& p);

/// The same check phrased over eta_signature components.
bool is_eta_bisimulation(const Model& m, const Partition& p);

inline constexpr std::size_t kLargestBisimulationMaxPoints = 2000;

/// Coarsest bisimulation by naive greatest-fixpoint splitting, starting
/// from the atom partition. Oracle-grade; throws SizeLimitError above
/// kLargestBisimulationMaxPoints points.
Partition largest_bisimulation(const Model& m);

namespace test_support {

/// Which transfer conditions is_bisimulation_bf enforces. Atoms are always
/// compared; `forward` covers the two forward transfers and `backward` the
/// two backward ones.
struct BisimConditions {
  bool forward = true;
  bool backward = true;
};

bool is_bisimulation_bf(const Model& m, const PointRelation& b, BisimConditions conditions);

}  // namespace test_support

}  // namespace slcs
