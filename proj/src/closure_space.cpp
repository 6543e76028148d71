#include "slcs/closure_space.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "slcs/errors.hpp"

namespace slcs {

FiniteClosureSpace::FiniteClosureSpace(std::vector<std::string> ids, std::vector<std::string> atoms,
                                       std::vector<std::vector<AtomIndex>> valuation,
                                       std::vector<PointSet> singleton_closure)
    : ids_(std::move(ids)),
      atoms_(std::move(atoms)),
      valuation_(std::move(valuation)),
      singleton_closure_(std::move(singleton_closure)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw ValidationError("closure space must have at least one point");
  if (valuation_.size() != n || singleton_closure_.size() != n)
    throw ValidationError("closure space tables do not match the number of points");
  if (!std::is_sorted(atoms_.begin(), atoms_.end()) ||
      std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
    throw ValidationError("atoms must be sorted and unique");
  std::set<std::string> unique_ids(ids_.begin(), ids_.end());
  if (unique_ids.size() != n) throw ValidationError("duplicate point id");

  std::map<std::vector<AtomIndex>, std::uint32_t> classes;
  label_class_.resize(n);
  for (PointIndex x = 0; x < n; ++x) {
    auto& va = valuation_[x];
    std::sort(va.begin(), va.end());
    va.erase(std::unique(va.begin(), va.end()), va.end());
    for (AtomIndex a : va)
      if (a >= atoms_.size()) throw ValidationError("valuation refers to an unknown atom");
    label_class_[x] = classes.emplace(va, static_cast<std::uint32_t>(classes.size())).first->second;

    if (singleton_closure_[x].carrier_size() != n) throw ValidationError("singleton closure on a wrong carrier");
    if (!singleton_closure_[x].contains(x))
      throw ValidationError("point '" + ids_[x] + "' is not in its own closure");
  }

  observers_.assign(n, PointSet(n));
  for (PointIndex z = 0; z < n; ++z) singleton_closure_[z].for_each([&](PointIndex x) { observers_[x].insert(z); });
}

FiniteClosureSpace FiniteClosureSpace::from_model(const Model& m) {
  std::vector<std::vector<AtomIndex>> valuation;
  std::vector<PointSet> sc;
  for (PointIndex x = 0; x < m.size(); ++x) {
    auto a = m.point_atoms(x);
    valuation.emplace_back(a.begin(), a.end());
    sc.push_back(forward_closure(m, x));
  }
  return FiniteClosureSpace(m.ids(), m.atoms(), std::move(valuation), std::move(sc));
}

std::optional<PointIndex> FiniteClosureSpace::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - ids_.begin());
}

PointSet FiniteClosureSpace::atom_points(const std::string& name) const {
  PointSet s(size());
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return s;
  const auto a = static_cast<AtomIndex>(it - atoms_.begin());
  for (PointIndex x = 0; x < size(); ++x)
    if (std::binary_search(valuation_[x].begin(), valuation_[x].end(), a)) s.insert(x);
  return s;
}

PointSet FiniteClosureSpace::closure(const PointSet& a) const {
  PointSet out(size());
  a.for_each([&](PointIndex x) { out |= singleton_closure_[x]; });
  return out;
}

PointSet FiniteClosureSpace::interior(const PointSet& a) const { return closure(a.complement()).complement(); }

Model FiniteClosureSpace::to_model() const {
  std::vector<Edge> edges;
  for (PointIndex x = 0; x < size(); ++x)
    singleton_closure_[x].for_each([&](PointIndex y) {
      if (y != x) edges.push_back({x, y});
    });
  return Model(ids_, atoms_, valuation_, std::move(edges));
}

PointSet cc_closure(const FiniteClosureSpace& s, const PointSet& a) { return s.closure(a); }
PointSet cc_interior(const FiniteClosureSpace& s, const PointSet& a) { return s.interior(a); }

namespace {

using Mask = std::uint32_t;

Mask to_mask(const PointSet& s) {
  Mask m = 0;
  s.for_each([&](PointIndex x) { m |= Mask{1} << x; });
  return m;
}

// closure of every subset of the carrier, indexed by subset mask
std::vector<Mask> closure_table(const FiniteClosureSpace& s) {
  const std::size_t n = s.size();
  std::vector<Mask> single(n);
  for (PointIndex x = 0; x < n; ++x) single[x] = to_mask(s.singleton_closure(x));
  std::vector<Mask> cl(std::size_t{1} << n, 0);
  for (Mask a = 1; a < cl.size(); ++a) cl[a] = cl[a & (a - 1)] | single[std::countr_zero(a)];
  return cl;
}

}  // namespace

bool is_gcm_bisimulation(const FiniteClosureSpace& s, const Partition& p) {
  const std::size_t n = s.size();
  if (n > kGcmBisimulationMaxPoints)
    throw SizeLimitError("is_gcm_bisimulation supports at most " + std::to_string(kGcmBisimulationMaxPoints) +
                         " points");
  if (p.size() != n) throw PreconditionError("partition is over a different carrier");

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const std::vector<Mask> cl = closure_table(s);
  std::vector<Mask> in(cl.size());
  for (Mask a = 0; a < cl.size(); ++a) in[a] = full & ~cl[full & ~a];

  // X2 candidates in increasing size
  std::vector<Mask> by_size(cl.size());
  for (Mask a = 0; a < by_size.size(); ++a) by_size[a] = a;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  std::vector<Mask> block_mask(p.block_count(), 0);
  for (PointIndex x = 0; x < n; ++x) block_mask[p.block_of(x)] |= Mask{1} << x;
  auto saturation = [&](Mask a) {
    Mask out = 0;
    for (PointIndex x = 0; x < n; ++x)
      if (a >> x & 1) out |= block_mask[p.block_of(x)];
    return out;
  };

  for (PointIndex x1 = 0; x1 < n; ++x1) {
    for (PointIndex x2 = 0; x2 < n; ++x2) {
      if (x1 == x2 || !p.same_block(x1, x2)) continue;
      if (s.label_class(x1) != s.label_class(x2)) return false;
      for (Mask x1set = 0; x1set < cl.size(); ++x1set) {
        if (!(in[x1set] >> x1 & 1)) continue;
        // every point of X2 needs a related point in X1
        const Mask partners = saturation(x1set);
        bool found = false;
        for (Mask x2set : by_size) {
          if ((x2set & ~partners) == 0 && (in[x2set] >> x2 & 1)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

namespace {

Partition iml_step(const FiniteClosureSpace& s, const Partition& q) {
  std::map<std::pair<std::uint32_t, std::vector<BlockId>>, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) {
    std::vector<BlockId> seen;
    s.observers(x).for_each([&](PointIndex z) { seen.push_back(q.block_of(z)); });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    labels[x] = ids.emplace(std::make_pair(s.label_class(x), std::move(seen)),
                            static_cast<std::uint32_t>(ids.size()))
                    .first->second;
  }
  return Partition(labels);
}

}  // namespace

RefinementTrace iml_refine(const FiniteClosureSpace& s) {
  RefinementTrace trace;
  Partition q = Partition::trivial(s.size());
  while (true) {
    Partition next = iml_step(s, q);
    const bool same = next == q;
    trace.rounds.push_back(next);
    if (same && trace.rounds.size() >= 2) return trace;
    q = std::move(next);
  }
}

Partition iml_equivalence(const FiniteClosureSpace& s) { return iml_refine(s).stable(); }

Partition closure_functor_equivalence(const FiniteClosureSpace& s) {
  const std::size_t n = s.size();
  if (n > kClosureFunctorMaxPoints)
    throw SizeLimitError("closure_functor_equivalence supports at most " + std::to_string(kClosureFunctorMaxPoints) +
                         " points");
  const std::vector<Mask> cl = closure_table(s);

  Partition q = Partition::trivial(n);
  while (true) {
    // blockwise image of every subset under q
    std::vector<Mask> image(cl.size(), 0);
    for (Mask a = 1; a < cl.size(); ++a)
      image[a] = image[a & (a - 1)] | Mask{1} << q.block_of(static_cast<PointIndex>(std::countr_zero(a)));

    std::map<std::pair<std::uint32_t, std::set<Mask>>, std::uint32_t> ids;
    std::vector<std::uint32_t> labels(n);
    for (PointIndex x = 0; x < n; ++x) {
      std::set<Mask> neighbourhoods;
      for (Mask a = 0; a < cl.size(); ++a)
        if (cl[a] >> x & 1) neighbourhoods.insert(image[a]);
      labels[x] = ids.emplace(std::make_pair(s.label_class(x), std::move(neighbourhoods)),
                              static_cast<std::uint32_t>(ids.size()))
                      .first->second;
    }
    Partition next(labels);
    if (next == q) return q;
    q = std::move(next);
  }
}

FiniteClosureSpace quotient_space(const FiniteClosureSpace& s, const Partition& p) {
  if (p.size() != s.size()) throw PreconditionError("partition is over a different carrier");
  if (!p.refines(iml_step(s, p))) throw PreconditionError("partition is not stable; quotient space is not well-defined");
  const std::size_t k = p.block_count();
  std::vector<std::string> ids;
  std::vector<std::vector<AtomIndex>> valuation;
  std::vector<PointSet> sc;
  for (BlockId c = 0; c < k; ++c) {
    const PointSet members = p.block(c);
    const PointIndex rep = members.members().front();
    ids.push_back("q" + std::to_string(c));
    auto a = s.point_atoms(rep);
    valuation.emplace_back(a.begin(), a.end());
    PointSet image(k);
    s.closure(members).for_each([&](PointIndex y) { image.insert(p.block_of(y)); });
    sc.push_back(std::move(image));
  }
  return FiniteClosureSpace(std::move(ids), s.atoms(), std::move(valuation), std::move(sc));
}

SatResult iml_sat(const FiniteClosureSpace& s, const Formula& formula) {
  require_fragment(formula, Fragment::Iml);
  SatResult result{formula, PointSet(s.size()), {}};
  std::unordered_map<const Node*, PointSet> memo;
  std::function<const PointSet&(const Formula&)> eval = [&](const Formula& g) -> const PointSet& {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    PointSet out(s.size());
    switch (g->op) {
      case Op::Atom:
        if (!std::binary_search(s.atoms().begin(), s.atoms().end(), g->atom))
          result.warnings.push_back("atom '" + g->atom + "' does not occur in the space; evaluated as empty");
        out = s.atom_points(g->atom);
        break;
      case Op::True: out = PointSet(s.size(), true); break;
      case Op::False: break;
      case Op::Not: out = eval(g->args.at(0)).complement(); break;
      case Op::Or: out = eval(g->args.at(0)) | eval(g->args.at(1)); break;
      case Op::And:
        out = PointSet(s.size(), true);
        for (const auto& a : g->args) out &= eval(a);
        break;
      case Op::Near: out = s.closure(eval(g->args.at(0))); break;
      default: throw PreconditionError("operator outside the near fragment");
    }
    return memo.emplace(g.get(), std::move(out)).first->second;
  };
  result.sat = eval(formula);
  return result;
}

std::optional<Formula> iml_distinguishing_formula(const FiniteClosureSpace& s, PointIndex x, PointIndex y) {
  const RefinementTrace trace = iml_refine(s);
  if (trace.stable().same_block(x, y)) return std::nullopt;

  std::map<std::pair<std::size_t, BlockId>, Formula> chi;
  std::function<Formula(std::size_t, BlockId)> build = [&](std::size_t round, BlockId block) -> Formula {
    if (auto it = chi.find({round, block}); it != chi.end()) return it->second;
    const Partition& here = trace.rounds[round];
    PointIndex rep = 0;
    while (here.block_of(rep) != block) ++rep;
    std::vector<Formula> conj;
    if (round == 0) {
      auto own = s.point_atoms(rep);
      for (AtomIndex a = 0; a < s.atoms().size(); ++a) {
        Formula p = f::atom(s.atoms()[a]);
        conj.push_back(std::binary_search(own.begin(), own.end(), a) ? p : f::neg(p));
      }
    } else {
      const Partition& prev = trace.rounds[round - 1];
      conj.push_back(build(round - 1, prev.block_of(rep)));
      std::vector<bool> near(prev.block_count());
      s.observers(rep).for_each([&](PointIndex z) { near[prev.block_of(z)] = true; });
      for (BlockId d = 0; d < prev.block_count(); ++d) {
        Formula n = f::near(build(round - 1, d));
        conj.push_back(near[d] ? n : f::neg(n));
      }
    }
    Formula out = f::land(std::move(conj));
    chi.emplace(std::make_pair(round, block), out);
    return out;
  };

  std::size_t r = 0;
  while (trace.rounds[r].same_block(x, y)) ++r;
  return build(r, trace.rounds[r].block_of(x));
}

}  // namespace slcs
