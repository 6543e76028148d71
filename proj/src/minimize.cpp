#include "slcs/minimize.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "slcs/errors.hpp"

namespace slcs {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

// Flat signature of one point: label, |fwd|, fwd blocks..., |bwd|, bwd blocks...
struct SigRef {
  const std::uint32_t* data;
  std::uint32_t len;
  std::uint64_t hash;
};

struct SigHash {
  std::size_t operator()(const SigRef& s) const { return s.hash; }
};

struct SigEq {
  bool operator()(const SigRef& a, const SigRef& b) const {
    return a.hash == b.hash && a.len == b.len && std::memcmp(a.data, b.data, a.len * sizeof(std::uint32_t)) == 0;
  }
};

// Writes the sorted, deduplicated block ids of {x} ∪ neighbours at `out`;
// returns how many were written.
std::uint32_t block_image(const Partition& q, PointIndex x, std::span<const PointIndex> neighbours,
                          std::uint32_t* out) {
  std::uint32_t k = 0;
  out[k++] = q.block_of(x);
  for (PointIndex y : neighbours) out[k++] = q.block_of(y);
  std::sort(out, out + k);
  return static_cast<std::uint32_t>(std::unique(out, out + k) - out);
}

}  // namespace

Partition refine_step(const Model& m, const Partition& q) {
  const std::size_t n = m.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (PointIndex x = 0; x < n; ++x)
    offset[x + 1] = offset[x] + 3 + m.successors(x).size() + 1 + m.predecessors(x).size() + 1;

  std::vector<std::uint32_t> buf(offset[n]);
  std::vector<SigRef> sigs(n);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto x = static_cast<PointIndex>(i);
    std::uint32_t* base = buf.data() + offset[x];
    base[0] = m.label_class(x);
    const std::uint32_t nf = block_image(q, x, m.successors(x), base + 2);
    base[1] = nf;
    const std::uint32_t nb = block_image(q, x, m.predecessors(x), base + 3 + nf);
    base[2 + nf] = nb;
    const std::uint32_t len = 3 + nf + nb;
    std::uint64_t h = 0;
    for (std::uint32_t k = 0; k < len; ++k) h = mix(h, base[k]);
    sigs[x] = {base, len, h};
  }

  // Canonical numbering by first occurrence keeps the result schedule-independent.
  std::unordered_map<SigRef, BlockId, SigHash, SigEq> ids;
  ids.reserve(q.block_count() * 2 + 16);
  std::vector<BlockId> block_of(n);
  for (PointIndex x = 0; x < n; ++x)
    block_of[x] = ids.emplace(sigs[x], static_cast<BlockId>(ids.size())).first->second;
  return Partition::from_canonical(std::move(block_of), ids.size());
}

Partition refine_step_serial(const Model& m, const Partition& q) {
  using Signature = std::tuple<std::uint32_t, std::set<BlockId>, std::set<BlockId>>;
  std::map<Signature, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(m.size());
  for (PointIndex x = 0; x < m.size(); ++x) {
    std::set<BlockId> fwd{q.block_of(x)}, bwd{q.block_of(x)};
    for (PointIndex y : m.successors(x)) fwd.insert(q.block_of(y));
    for (PointIndex y : m.predecessors(x)) bwd.insert(q.block_of(y));
    Signature sig{m.label_class(x), std::move(fwd), std::move(bwd)};
    labels[x] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return Partition(labels);
}

namespace {

template <typename Step>
RefinementTrace iterate(const Model& m, Step step) {
  RefinementTrace trace;
  Partition q = Partition::trivial(m.size());
  while (true) {
    Partition next = step(m, q);
    const bool same = next == q;
    trace.rounds.push_back(next);
    if (same && trace.rounds.size() >= 2) return trace;
    q = std::move(next);
  }
}

}  // namespace

RefinementTrace partition_refine(const Model& m) { return iterate(m, refine_step); }

RefinementTrace partition_refine_serial(const Model& m) { return iterate(m, refine_step_serial); }

bool is_stable(const Model& m, const Partition& q) {
  if (q.size() != m.size()) throw PreconditionError("partition is over a different carrier");
  return q.refines(refine_step(m, q));
}

QuotientModel quotient(const Model& m, const Partition& p) {
  if (!is_stable(m, p)) throw PreconditionError("partition is not a bisimulation; quotient is not well-defined");
  const auto blocks = p.blocks();
  std::vector<std::string> ids;
  std::vector<std::vector<AtomIndex>> valuation;
  std::vector<Edge> edges;
  for (BlockId c = 0; c < blocks.size(); ++c) {
    const PointIndex rep = blocks[c].front();
    ids.push_back("q" + std::to_string(c));
    auto atoms = m.point_atoms(rep);
    valuation.emplace_back(atoms.begin(), atoms.end());
    std::set<BlockId> seen;
    forward_closure(m, rep).for_each([&](PointIndex y) { seen.insert(p.block_of(y)); });
    for (BlockId d : seen) edges.push_back({c, d});
  }
  QuotientModel out{Model(std::move(ids), m.atoms(), std::move(valuation), std::move(edges)), {}};
  out.projection.assign(p.assignment().begin(), p.assignment().end());
  return out;
}

CharacteristicFormulas::CharacteristicFormulas(const Model& m, const RefinementTrace& trace)
    : m_(m), trace_(trace) {}

Formula CharacteristicFormulas::step_literal(std::size_t round, BlockId d, bool forward) {
  auto key = std::make_tuple(round, d, forward);
  if (auto it = steps_.find(key); it != steps_.end()) return it->second;
  Formula chi = formula(round, d);
  Formula lit = forward ? f::reach_fwd(chi, f::ff()) : f::reach_bwd(chi, f::ff());
  steps_.emplace(key, lit);
  return lit;
}

Formula CharacteristicFormulas::formula(std::size_t round, BlockId block) {
  if (round >= trace_.rounds.size()) throw std::out_of_range("refinement round out of range");
  const Partition& here = trace_.rounds[round];
  if (block >= here.block_count()) throw std::out_of_range("block out of range");
  if (auto it = chi_.find({round, block}); it != chi_.end()) return it->second;

  PointIndex rep = 0;
  while (here.block_of(rep) != block) ++rep;

  std::vector<Formula> conj;
  if (round == 0) {
    auto own = m_.point_atoms(rep);
    for (AtomIndex a = 0; a < m_.atoms().size(); ++a) {
      Formula p = f::atom(m_.atoms()[a]);
      conj.push_back(std::binary_search(own.begin(), own.end(), a) ? p : f::neg(p));
    }
  } else {
    const Partition& prev = trace_.rounds[round - 1];
    conj.push_back(formula(round - 1, prev.block_of(rep)));
    std::vector<bool> fwd(prev.block_count()), bwd(prev.block_count());
    forward_closure(m_, rep).for_each([&](PointIndex y) { fwd[prev.block_of(y)] = true; });
    backward_closure(m_, rep).for_each([&](PointIndex y) { bwd[prev.block_of(y)] = true; });
    for (BlockId d = 0; d < prev.block_count(); ++d) {
      Formula lf = step_literal(round - 1, d, true);
      conj.push_back(fwd[d] ? lf : f::neg(lf));
      Formula lb = step_literal(round - 1, d, false);
      conj.push_back(bwd[d] ? lb : f::neg(lb));
    }
  }
  Formula out = f::land(std::move(conj));
  chi_.emplace(std::make_pair(round, block), out);
  return out;
}

Formula characteristic_formula(const RefinementTrace& trace, const Model& m, BlockId block, std::size_t round) {
  return CharacteristicFormulas(m, trace).formula(round, block);
}

std::optional<Formula> distinguishing_formula(const Model& m, const RefinementTrace& trace, PointIndex x,
                                              PointIndex y) {
  if (trace.stable().same_block(x, y)) return std::nullopt;
  std::size_t r = 0;
  while (trace.rounds[r].same_block(x, y)) ++r;
  return CharacteristicFormulas(m, trace).formula(r, trace.rounds[r].block_of(x));
}

std::optional<Formula> distinguishing_formula(const Model& m, PointIndex x, PointIndex y) {
  return distinguishing_formula(m, partition_refine(m), x, y);
}

}  // namespace slcs
