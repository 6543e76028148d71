#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "slcs/formula.hpp"
#include "slcs/model.hpp"
#include "slcs/partition.hpp"

namespace slcs {

/// Partitions produced by successive refinement steps. rounds[0] is the
/// first step out of the one-block start, i.e. the atom partition; each
/// round refines the previous one and the last two rounds are equal.
struct RefinementTrace {
  std::vector<Partition> rounds;
  const Partition& stable() const { return rounds.back(); }
};

/// One refinement step: the kernel of x ↦ (V^-1 x, q[fwd(x)], q[bwd(x)]).
/// Signatures are computed in parallel over points; block numbering is
/// canonical, so the result does not depend on the thread schedule.
Partition refine_step(const Model& m, const Partition& q);
/// Single-threaded reference for refine_step with an independent
/// signature representation.
Partition refine_step_serial(const Model& m, const Partition& q);

/// Iterates refine_step from the one-block partition until the kernel is
/// unchanged. The stable partition is the coarsest bisimulation.
RefinementTrace partition_refine(const Model& m);
RefinementTrace partition_refine_serial(const Model& m);

/// Every block of q has a constant one-step signature w.r.t. q
/// (equivalently: q is an eta-bisimulation).
bool is_stable(const Model& m, const Partition& q);

struct QuotientModel {
  Model model;
  std::vector<PointIndex> projection;  // original point -> quotient point
};

/// Model on the blocks of p. Block C gets the atoms of its members and an
/// edge (C, D) for every block D met by the forward closure of a member,
/// including D = C, so forward closure in the quotient is exactly the
/// blockwise image of forward closure in m. Quotient point k is named "q<k>".
/// Throws PreconditionError if p is not stable.
QuotientModel quotient(const Model& m, const Partition& p);

/// Lazily builds SLCS-minus formulas characterising refinement blocks.
///
///  round 0:   conjunction over all atoms of p / !p fixing the block's atoms
///  round k+1: chi_k(parent) & AND_D [!]reachFwd(chi_k(D), false)
///                           & AND_D [!]reachBwd(chi_k(D), false)
///
/// where D ranges over the round-k blocks and the negation is chosen by
/// whether the block's members see D in one step. Subformulas are shared,
/// so the DAG stays polynomial although the printed form grows quickly.
class CharacteristicFormulas {
public:
  CharacteristicFormulas(const Model& m, const RefinementTrace& trace);

  /// sat(formula(round, b)) is exactly block b of trace.rounds[round].
  /// Throws std::out_of_range on a bad round or block.
  Formula formula(std::size_t round, BlockId block);

private:
  Formula step_literal(std::size_t round, BlockId d, bool forward);

  const Model& m_;
  const RefinementTrace& trace_;
  std::map<std::pair<std::size_t, BlockId>, Formula> chi_;
  std::map<std::tuple<std::size_t, BlockId, bool>, Formula> steps_;
};

Formula characteristic_formula(const RefinementTrace& trace, const Model& m, BlockId block, std::size_t round);

/// An SLCS-minus formula satisfied by x and not by y, or none when x and y
/// are bisimilar. It characterises x's block at the first round that
/// separates the two points.
std::optional<Formula> distinguishing_formula(const Model& m, PointIndex x, PointIndex y);
std::optional<Formula> distinguishing_formula(const Model& m, const RefinementTrace& trace, PointIndex x,
                                              PointIndex y);

}  // namespace slcs
