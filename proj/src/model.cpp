#include "slcs/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "slcs/errors.hpp"

namespace slcs {

namespace {

void build_csr(std::size_t n, std::span<const Edge> edges, bool forward,
               std::vector<std::uint32_t>& offsets, std::vector<PointIndex>& targets) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(forward ? e.from : e.to) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(edges.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  // edges are sorted by (from, to) so forward lists come out sorted; backward
  // lists are sorted by from within each target because of the same order.
  for (const Edge& e : edges) {
    const PointIndex src = forward ? e.from : e.to;
    targets[cursor[src]++] = forward ? e.to : e.from;
  }
}

}  // namespace

Model::Model(std::vector<std::string> ids, std::vector<std::string> atoms,
             std::vector<std::vector<AtomIndex>> valuation, std::vector<Edge> edges)
    : ids_(std::move(ids)), valuation_(std::move(valuation)), edges_(std::move(edges)) {
  if (ids_.empty()) throw ValidationError("model must have at least one point");
  if (valuation_.size() != ids_.size())
    throw ValidationError("valuation size does not match number of points");

  index_.reserve(ids_.size());
  for (PointIndex i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw ValidationError("duplicate point id '" + ids_[i] + "'");
  }

  // Keep atoms sorted; remap the valuation if the caller passed another order.
  std::vector<AtomIndex> order(atoms.size());
  for (AtomIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](AtomIndex a, AtomIndex b) { return atoms[a] < atoms[b]; });
  std::vector<AtomIndex> remap(atoms.size());
  atoms_.reserve(atoms.size());
  for (AtomIndex i = 0; i < order.size(); ++i) {
    if (i > 0 && atoms[order[i]] == atoms_.back())
      throw ValidationError("duplicate atom '" + atoms[order[i]] + "'");
    remap[order[i]] = i;
    atoms_.push_back(std::move(atoms[order[i]]));
  }
  for (auto& va : valuation_) {
    for (auto& a : va) {
      if (a >= remap.size()) throw ValidationError("valuation refers to an unknown atom");
      a = remap[a];
    }
    std::sort(va.begin(), va.end());
    va.erase(std::unique(va.begin(), va.end()), va.end());
  }

  std::map<std::vector<AtomIndex>, std::uint32_t> classes;
  label_class_.resize(ids_.size());
  for (PointIndex i = 0; i < ids_.size(); ++i) {
    auto [it, inserted] = classes.emplace(valuation_[i], static_cast<std::uint32_t>(classes.size()));
    label_class_[i] = it->second;
  }
  label_class_count_ = classes.size();

  for (const Edge& e : edges_) {
    if (e.from >= ids_.size() || e.to >= ids_.size())
      throw ValidationError("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  build_csr(ids_.size(), edges_, true, succ_offsets_, succ_);
  build_csr(ids_.size(), edges_, false, pred_offsets_, pred_);
}

Model Model::from_names(std::vector<std::string> ids,
                        const std::vector<std::vector<std::string>>& point_atoms,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& extra_atoms) {
  if (point_atoms.size() != ids.size())
    throw ValidationError("atom list count does not match number of points");
  std::set<std::string> universe(extra_atoms.begin(), extra_atoms.end());
  for (const auto& pa : point_atoms) universe.insert(pa.begin(), pa.end());
  std::vector<std::string> atoms(universe.begin(), universe.end());
  std::map<std::string, AtomIndex> atom_ix;
  for (AtomIndex i = 0; i < atoms.size(); ++i) atom_ix.emplace(atoms[i], i);

  std::vector<std::vector<AtomIndex>> valuation(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (const auto& a : point_atoms[i]) valuation[i].push_back(atom_ix.at(a));

  std::unordered_map<std::string, PointIndex> ix;
  for (PointIndex i = 0; i < ids.size(); ++i) ix.emplace(ids[i], i);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    auto iu = ix.find(u), iv = ix.find(v);
    if (iu == ix.end() || iv == ix.end())
      throw ValidationError("dangling edge (" + u + ", " + v + ")");
    es.push_back({iu->second, iv->second});
  }
  return Model(std::move(ids), std::move(atoms), std::move(valuation), std::move(es));
}

std::optional<PointIndex> Model::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex Model::at(const std::string& id) const {
  auto ix = index_of(id);
  if (!ix) throw ValidationError("unknown point '" + id + "'");
  return *ix;
}

std::optional<AtomIndex> Model::atom_index(const std::string& name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return std::nullopt;
  return static_cast<AtomIndex>(it - atoms_.begin());
}

std::vector<std::string> Model::point_atom_names(PointIndex x) const {
  std::vector<std::string> out;
  for (AtomIndex a : valuation_[x]) out.push_back(atoms_[a]);
  return out;
}

PointSet Model::atom_points(const std::string& name) const {
  PointSet s(size());
  auto a = atom_index(name);
  if (!a) return s;
  for (PointIndex x = 0; x < size(); ++x)
    if (std::binary_search(valuation_[x].begin(), valuation_[x].end(), *a)) s.insert(x);
  return s;
}

std::span<const PointIndex> Model::successors(PointIndex x) const {
  return std::span<const PointIndex>(succ_).subspan(succ_offsets_[x], succ_offsets_[x + 1] - succ_offsets_[x]);
}

std::span<const PointIndex> Model::predecessors(PointIndex x) const {
  return std::span<const PointIndex>(pred_).subspan(pred_offsets_[x], pred_offsets_[x + 1] - pred_offsets_[x]);
}

Model Model::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back({e.to, e.from});
  return Model(ids_, atoms_, valuation_, std::move(rev));
}

PointSet closure(const Model& m, const PointSet& a) {
  PointSet out = a;
  a.for_each([&](PointIndex u) {
    for (PointIndex v : m.successors(u)) out.insert(v);
  });
  return out;
}

PointSet closure_backward(const Model& m, const PointSet& a) {
  PointSet out = a;
  a.for_each([&](PointIndex u) {
    for (PointIndex v : m.predecessors(u)) out.insert(v);
  });
  return out;
}

PointSet interior(const Model& m, const PointSet& a) {
  return closure(m, a.complement()).complement();
}

PointSet forward_closure(const Model& m, PointIndex x) {
  PointSet out(m.size());
  out.insert(x);
  for (PointIndex v : m.successors(x)) out.insert(v);
  return out;
}

PointSet backward_closure(const Model& m, PointIndex x) {
  PointSet out(m.size());
  out.insert(x);
  for (PointIndex v : m.predecessors(x)) out.insert(v);
  return out;
}

bool is_path_prefix(const Model& m, std::span<const PointIndex> seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i + 1] == seq[i]) continue;
    auto succ = m.successors(seq[i]);
    if (!std::binary_search(succ.begin(), succ.end(), seq[i + 1])) return false;
  }
  return true;
}

}  // namespace slcs
