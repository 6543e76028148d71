#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slcs/checker.hpp"
#include "slcs/formula.hpp"
#include "slcs/minimize.hpp"
#include "slcs/model.hpp"
#include "slcs/partition.hpp"

namespace slcs {

/// A finite closure model given by the closures of its singletons.
/// Invariant: C(A) is the union of C({x}) over x in A.
class FiniteClosureSpace {
public:
  /// Throws ValidationError unless every x lies in its own singleton closure
  /// and all sets live on the same carrier.
  FiniteClosureSpace(std::vector<std::string> ids, std::vector<std::string> atoms,
                     std::vector<std::vector<AtomIndex>> valuation, std::vector<PointSet> singleton_closure);

  /// The space induced by the model's relation: C({x}) = forward_closure(x).
  static FiniteClosureSpace from_model(const Model& m);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(PointIndex x) const { return ids_[x]; }
  std::optional<PointIndex> index_of(const std::string& id) const;
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::span<const AtomIndex> point_atoms(PointIndex x) const { return valuation_[x]; }
  std::uint32_t label_class(PointIndex x) const { return label_class_[x]; }
  PointSet atom_points(const std::string& name) const;

  const PointSet& singleton_closure(PointIndex x) const { return singleton_closure_[x]; }
  /// {z | x ∈ C({z})}: the points whose closure reaches x.
  const PointSet& observers(PointIndex x) const { return observers_[x]; }

  PointSet closure(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;

  /// Relation-based model with x R y iff y ∈ C({x}), y != x.
  Model to_model() const;

  friend bool operator==(const FiniteClosureSpace& a, const FiniteClosureSpace& b) {
    return a.ids_ == b.ids_ && a.atoms_ == b.atoms_ && a.valuation_ == b.valuation_ &&
           a.singleton_closure_ == b.singleton_closure_;
  }

private:
  std::vector<std::string> ids_;
  std::vector<std::string> atoms_;
  std::vector<std::vector<AtomIndex>> valuation_;
  std::vector<std::uint32_t> label_class_;
  std::vector<PointSet> singleton_closure_;
  std::vector<PointSet> observers_;
};

/// Coalgebra view x ↦ (V^-1 x, {A | x ∈ C(A)}). The second component is
/// kept intensional: it is only ever queried by membership.
class ClosureCoalgebraView {
public:
  explicit ClosureCoalgebraView(const FiniteClosureSpace& s) : s_(s) {}
  std::span<const AtomIndex> atoms(PointIndex x) const { return s_.point_atoms(x); }
  /// A ∈ (eta x)_2, i.e. x ∈ C(A).
  bool neighbourhood_contains(PointIndex x, const PointSet& a) const { return s_.observers(x).intersects(a); }

private:
  const FiniteClosureSpace& s_;
};

PointSet cc_closure(const FiniteClosureSpace& s, const PointSet& a);
PointSet cc_interior(const FiniteClosureSpace& s, const PointSet& a);

inline constexpr std::size_t kGcmBisimulationMaxPoints = 14;
inline constexpr std::size_t kClosureFunctorMaxPoints = 10;

/// Neighbourhood bisimulation check on an equivalence: related points carry
/// the same atoms, and for every X1 with x1 ∈ I(X1) some X2 with x2 ∈ I(X2)
/// has all its points related to points of X1. Candidate sets X2 are tried
/// by increasing size. Throws SizeLimitError above kGcmBisimulationMaxPoints.
bool is_gcm_bisimulation(const FiniteClosureSpace& s, const Partition& p);

/// Refinement with signature (V^-1 x, {q(z) | x ∈ C({z})}). rounds[0] is
/// the atom partition; the last two rounds coincide.
RefinementTrace iml_refine(const FiniteClosureSpace& s);
/// Logical equivalence for atoms, negation, finite conjunction and near.
Partition iml_equivalence(const FiniteClosureSpace& s);

/// Refinement with the closure-functor signature
/// (V^-1 x, {q[A] | A ⊆ X, x ∈ C(A)}), sweeping every subset of the
/// carrier. Throws SizeLimitError above kClosureFunctorMaxPoints points.
Partition closure_functor_equivalence(const FiniteClosureSpace& s);

/// Quotient space on the blocks of p: C([x]) = q[C(q^-1 [x])]. Quotient
/// point k is block k, named "q<k>". Throws PreconditionError unless p is
/// stable under the near-signature refinement.
FiniteClosureSpace quotient_space(const FiniteClosureSpace& s, const Partition& p);

/// Satisfaction for the near fragment; near f is C(sat f). Throws
/// PreconditionError for reach, surrounded or propagate nodes.
SatResult iml_sat(const FiniteClosureSpace& s, const Formula& formula);

/// Near-fragment formula true at x and false at y, or none if x and y are
/// logically equivalent in that fragment.
std::optional<Formula> iml_distinguishing_formula(const FiniteClosureSpace& s, PointIndex x, PointIndex y);

}  // namespace slcs
