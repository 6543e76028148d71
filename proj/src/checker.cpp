#include "slcs/checker.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "slcs/errors.hpp"

namespace slcs {

namespace {

void check_arity(const Node& n) {
  std::size_t want = 0;
  switch (n.op) {
    case Op::Atom:
    case Op::True:
    case Op::False: want = 0; break;
    case Op::Not:
    case Op::Near: want = 1; break;
    case Op::And: return;
    default: want = 2;
  }
  if (n.args.size() != want) throw PreconditionError("malformed formula node");
  for (const auto& a : n.args)
    if (!a) throw PreconditionError("malformed formula node");
}

// pre(Z) for the given direction: points whose one-step neighbourhood meets Z.
PointSet pre(const Model& m, const PointSet& z, Direction dir) {
  return dir == Direction::Forward ? closure_backward(m, z) : closure(m, z);
}

}  // namespace

namespace detail {

PointSet reach(const Model& m, const PointSet& s1, const PointSet& s2, Direction dir) {
  PointSet b = s1;
  std::deque<PointIndex> work;
  s1.for_each([&](PointIndex x) { work.push_back(x); });
  while (!work.empty()) {
    const PointIndex z = work.front();
    work.pop_front();
    auto stepping_in = dir == Direction::Forward ? m.predecessors(z) : m.successors(z);
    for (PointIndex x : stepping_in) {
      if (s2.contains(x) && !b.contains(x)) {
        b.insert(x);
        work.push_back(x);
      }
    }
  }
  return pre(m, b, dir);
}

std::vector<PointSet> reach_iterates(const Model& m, const PointSet& s1, const PointSet& s2, Direction dir) {
  std::vector<PointSet> out{PointSet(m.size())};
  while (true) {
    PointSet next = s1 | (s2 & pre(m, out.back(), dir));
    const bool done = next == out.back();
    out.push_back(std::move(next));
    if (done) return out;
  }
}

}  // namespace detail

SatResult sat(const Model& m, const Formula& formula) {
  SatResult result{formula, PointSet(m.size()), {}};
  std::unordered_map<const Node*, PointSet> memo;

  std::function<const PointSet&(const Formula&)> eval = [&](const Formula& g) -> const PointSet& {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    check_arity(*g);
    PointSet s(m.size());
    switch (g->op) {
      case Op::Atom:
        if (!m.atom_index(g->atom))
          result.warnings.push_back("atom '" + g->atom + "' does not occur in the model; evaluated as empty");
        s = m.atom_points(g->atom);
        break;
      case Op::True: s = m.full_set(); break;
      case Op::False: break;
      case Op::Not: s = eval(g->args[0]).complement(); break;
      case Op::Or: s = eval(g->args[0]) | eval(g->args[1]); break;
      case Op::And:
        s = m.full_set();
        for (const auto& a : g->args) s &= eval(a);
        break;
      case Op::ReachFwd: s = detail::reach(m, eval(g->args[0]), eval(g->args[1]), Direction::Forward); break;
      case Op::ReachBwd: s = detail::reach(m, eval(g->args[0]), eval(g->args[1]), Direction::Backward); break;
      default: throw PreconditionError("derived operator survived desugaring");
    }
    return memo.emplace(g.get(), std::move(s)).first->second;
  };

  result.sat = eval(desugar(formula));
  return result;
}

namespace {

// Searches a path prefix pi with pi(0) = x (forward) or pi(l) = x (backward)
// whose far end satisfies `target` and whose interior satisfies `via`.
class PathSearch {
public:
  PathSearch(const Model& m, const PointSet& target, const PointSet& via, Direction dir)
      : m_(m), target_(target), via_(via), dir_(dir), on_path_(m.size()) {}

  bool from(PointIndex x) {
    trail_.assign(1, x);
    on_path_ = PointSet(m_.size());
    on_path_.insert(x);
    return extend();
  }

private:
  // trail_ holds the sequence starting at x and walking away from it.
  bool witnessed() const {
    std::vector<PointIndex> pi(trail_.begin(), trail_.end());
    if (dir_ == Direction::Backward) std::reverse(pi.begin(), pi.end());
    if (!is_path_prefix(m_, pi)) return false;
    const std::size_t ell = pi.size() - 1;
    const PointIndex end = dir_ == Direction::Forward ? pi[ell] : pi[0];
    if (!target_.contains(end)) return false;
    for (std::size_t j = 1; j < ell; ++j)
      if (!via_.contains(pi[j])) return false;
    return true;
  }

  bool extend() {
    if (target_.contains(trail_.back()) && witnessed()) return true;
    // the current end becomes an interior point if we continue past it
    if (trail_.size() > 1 && !via_.contains(trail_.back())) return false;
    const PointIndex z = trail_.back();
    auto next = dir_ == Direction::Forward ? m_.successors(z) : m_.predecessors(z);
    for (PointIndex w : next) {
      if (on_path_.contains(w)) continue;
      trail_.push_back(w);
      on_path_.insert(w);
      const bool found = extend();
      on_path_.erase(w);
      trail_.pop_back();
      if (found) return true;
    }
    return false;
  }

  const Model& m_;
  const PointSet& target_;
  const PointSet& via_;
  Direction dir_;
  std::vector<PointIndex> trail_;
  PointSet on_path_;
};

}  // namespace

SatResult sat_oracle(const Model& m, const Formula& formula) {
  if (m.size() > kOracleMaxPoints)
    throw SizeLimitError("sat_oracle supports at most " + std::to_string(kOracleMaxPoints) + " points, model has " +
                         std::to_string(m.size()));
  SatResult result{formula, PointSet(m.size()), {}};
  std::unordered_map<const Node*, PointSet> memo;

  std::function<const PointSet&(const Formula&)> eval = [&](const Formula& g) -> const PointSet& {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    check_arity(*g);
    std::vector<const PointSet*> args;
    for (const auto& a : g->args) args.push_back(&eval(a));
    if (g->op == Op::Atom && !m.atom_index(g->atom))
      result.warnings.push_back("atom '" + g->atom + "' does not occur in the model; evaluated as empty");

    PointSet s(m.size());
    for (PointIndex x = 0; x < m.size(); ++x) {
      bool holds = false;
      switch (g->op) {
        case Op::Atom: {
          auto pa = m.point_atoms(x);
          auto a = m.atom_index(g->atom);
          holds = a && std::find(pa.begin(), pa.end(), *a) != pa.end();
          break;
        }
        case Op::True: holds = true; break;
        case Op::False: holds = false; break;
        case Op::Not: holds = !args[0]->contains(x); break;
        case Op::Or: holds = args[0]->contains(x) || args[1]->contains(x); break;
        case Op::And:
          holds = true;
          for (auto* a : args) holds = holds && a->contains(x);
          break;
        case Op::ReachFwd: holds = PathSearch(m, *args[0], *args[1], Direction::Forward).from(x); break;
        case Op::ReachBwd: holds = PathSearch(m, *args[0], *args[1], Direction::Backward).from(x); break;
        default: throw PreconditionError("derived operator survived desugaring");
      }
      if (holds) s.insert(x);
    }
    return memo.emplace(g.get(), std::move(s)).first->second;
  };

  result.sat = eval(desugar(formula));
  return result;
}

bool logically_equivalent(const Model& m, PointIndex x, PointIndex y, std::span<const Formula> corpus) {
  for (const auto& phi : corpus) {
    const PointSet s = sat(m, phi).sat;
    if (s.contains(x) != s.contains(y)) return false;
  }
  return true;
}

}  // namespace slcs
