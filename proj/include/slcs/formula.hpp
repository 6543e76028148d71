#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace slcs {

enum class Op : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  Or,
  And,
  ReachFwd,
  ReachBwd,
  Near,
  Surrounded,
  Propagate,
};

struct Node;

/// Formulas are immutable and shared: subterms may appear under several
/// parents, so a formula is in general a DAG. Every consumer in this library
/// is memoized on node identity and runs in time linear in the DAG size.
using Formula = std::shared_ptr<const Node>;

struct Node {
  Op op;
  std::string atom;           // Atom only
  std::vector<Formula> args;  // Not: 1, Or: 2, And: any, Reach*/Surrounded/Propagate: 2, Near: 1
};

namespace f {

Formula atom(std::string name);
Formula tt();
Formula ff();
Formula neg(Formula a);
Formula lor(Formula a, Formula b);
/// n-ary conjunction; an empty list means true.
Formula land(std::vector<Formula> conjuncts);
Formula land(Formula a, Formula b);
Formula reach_fwd(Formula target, Formula via);
Formula reach_bwd(Formula source, Formula via);
Formula near(Formula a);
Formula surrounded(Formula inner, Formula boundary);
Formula propagate(Formula source, Formula area);

}  // namespace f

/// Structural equality (ignores sharing).
bool equal(const Formula& a, const Formula& b);

/// Rewrites Near, Surrounded and Propagate into the core connectives:
///   near f           = reachBwd(f, false)
///   surrounded(f, g) = f & !reachFwd(!(f | g), !g)
///   propagate(f, g)  = g & reachBwd(f, g)
/// Sharing in the input is preserved in the output.
Formula desugar(const Formula& f);

enum class Fragment {
  Slcs,       // everything
  SlcsMinus,  // both reach operators restricted to a false second argument
  Iml,        // atoms, boolean connectives and near only
};

/// True iff every reach operator in desugar(f) has `false` as second argument.
bool is_sublogic_minus(const Formula& f);
/// True iff f contains no reach, surrounded or propagate node.
bool is_iml(const Formula& f);
bool in_fragment(const Formula& f, Fragment fragment);
/// Throws PreconditionError when f is outside `fragment`.
void require_fragment(const Formula& f, Fragment fragment);

/// Concrete syntax accepted by parse(). Shared subterms are printed in full.
std::string to_string(const Formula& f);

/// Depth of the formula tree; atoms and constants have depth 0.
std::size_t depth(const Formula& f);
/// Number of distinct nodes in the DAG.
std::size_t dag_size(const Formula& f);
std::set<std::string> atoms_of(const Formula& f);

}  // namespace slcs
