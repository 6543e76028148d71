#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slcs/point_set.hpp"

namespace slcs {

using AtomIndex = std::uint32_t;

struct Edge {
  PointIndex from;
  PointIndex to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Quasi-discrete closure model: a finite carrier, a directed relation R
/// and an atomic-proposition valuation. Immutable once constructed.
///
/// Points and atoms are interned to dense indices. Atom names are kept in
/// ascending order; each point's atom list is sorted ascending. Edges are
/// stored exactly as given (sorted, duplicates collapsed) with no reflexive
/// or symmetric completion.
class Model {
public:
  /// Index-level constructor. Throws ValidationError on an empty carrier,
  /// duplicate ids, out-of-range edge endpoints or unknown atom indices.
  Model(std::vector<std::string> ids, std::vector<std::string> atoms,
        std::vector<std::vector<AtomIndex>> valuation, std::vector<Edge> edges);

  /// Name-level constructor; the atom universe is the union of `extra_atoms`
  /// and every atom mentioned in `point_atoms`.
  static Model from_names(std::vector<std::string> ids,
                          const std::vector<std::vector<std::string>>& point_atoms,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& extra_atoms = {});

  std::size_t size() const { return ids_.size(); }
  const std::string& id(PointIndex x) const { return ids_[x]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<PointIndex> index_of(const std::string& id) const;
  PointIndex at(const std::string& id) const;  // throws ValidationError

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<AtomIndex> atom_index(const std::string& name) const;
  std::span<const AtomIndex> point_atoms(PointIndex x) const { return valuation_[x]; }
  std::vector<std::string> point_atom_names(PointIndex x) const;

  /// Dense id of the valuation V^-1(x); equal ids iff equal atom sets.
  /// Numbered by first occurrence in point-index order.
  std::uint32_t label_class(PointIndex x) const { return label_class_[x]; }
  std::size_t label_class_count() const { return label_class_count_; }

  /// V(p): points carrying atom `name`; empty for unknown atoms.
  PointSet atom_points(const std::string& name) const;

  std::span<const Edge> edges() const { return edges_; }
  std::span<const PointIndex> successors(PointIndex x) const;
  std::span<const PointIndex> predecessors(PointIndex x) const;

  Model reversed() const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet(size(), true); }

  friend bool operator==(const Model& a, const Model& b) {
    return a.ids_ == b.ids_ && a.atoms_ == b.atoms_ && a.valuation_ == b.valuation_ &&
           a.edges_ == b.edges_;
  }

private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, PointIndex> index_;
  std::vector<std::string> atoms_;
  std::vector<std::vector<AtomIndex>> valuation_;
  std::vector<std::uint32_t> label_class_;
  std::size_t label_class_count_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency
  std::vector<std::uint32_t> succ_offsets_, pred_offsets_;
  std::vector<PointIndex> succ_, pred_;
};

/// C_R(A) = A ∪ {x | some a in A with a R x}.
PointSet closure(const Model& m, const PointSet& a);
/// C_{R^-1}(A): closure under the reversed relation.
PointSet closure_backward(const Model& m, const PointSet& a);
/// I(A) = complement of C_R(complement of A).
PointSet interior(const Model& m, const PointSet& a);

PointSet forward_closure(const Model& m, PointIndex x);
PointSet backward_closure(const Model& m, PointIndex x);

/// True iff every consecutive pair satisfies seq[i+1] ∈ forward_closure(seq[i]).
bool is_path_prefix(const Model& m, std::span<const PointIndex> seq);

}  // namespace slcs
