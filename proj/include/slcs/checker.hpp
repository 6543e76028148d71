#pragma once

#include <span>
#include <string>
#include <vector>

#include "slcs/formula.hpp"
#include "slcs/model.hpp"

namespace slcs {

struct SatResult {
  Formula formula;
  PointSet sat;                       // {x | M, x ⊨ formula}
  std::vector<std::string> warnings;  // e.g. atoms absent from the model
};

/// Set-based model checking. The formula is desugared first; reach
/// operators are computed as least fixpoints over the relation. Atoms the
/// model does not know evaluate to the empty set and produce a warning.
SatResult sat(const Model& m, const Formula& formula);

/// Largest model accepted by sat_oracle.
inline constexpr std::size_t kOracleMaxPoints = 12;

/// Literal path semantics: reach operators are decided by enumerating
/// finite path prefixes (simple paths suffice) and checking the satisfaction
/// clauses directly. Throws SizeLimitError above kOracleMaxPoints points.
SatResult sat_oracle(const Model& m, const Formula& formula);

/// x and y agree on every formula of `corpus`.
bool logically_equivalent(const Model& m, PointIndex x, PointIndex y, std::span<const Formula> corpus);

enum class Direction { Forward, Backward };

namespace detail {

/// reachFwd(s1, s2) (or reachBwd) by a worklist over the reversed step relation.
PointSet reach(const Model& m, const PointSet& s1, const PointSet& s2, Direction dir);

/// Kleene iterates Z_0 = ∅, Z_{i+1} = S1 ∪ (S2 ∩ pre(Z_i)) up to and
/// including the first repeated value. Exposed for fixpoint property tests.
std::vector<PointSet> reach_iterates(const Model& m, const PointSet& s1, const PointSet& s2, Direction dir);

}  // namespace detail

}  // namespace slcs
