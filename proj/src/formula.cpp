#include "slcs/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "slcs/errors.hpp"

namespace slcs {

namespace f {

namespace {
Formula make(Op op, std::vector<Formula> args = {}, std::string atom = {}) {
  return std::make_shared<const Node>(Node{op, std::move(atom), std::move(args)});
}
}  // namespace

Formula atom(std::string name) { return make(Op::Atom, {}, std::move(name)); }
Formula tt() {
  static const Formula t = make(Op::True);
  return t;
}
Formula ff() {
  static const Formula b = make(Op::False);
  return b;
}
Formula neg(Formula a) { return make(Op::Not, {std::move(a)}); }
Formula lor(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
Formula land(std::vector<Formula> conjuncts) { return make(Op::And, std::move(conjuncts)); }
Formula land(Formula a, Formula b) { return land(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula reach_fwd(Formula target, Formula via) { return make(Op::ReachFwd, {std::move(target), std::move(via)}); }
Formula reach_bwd(Formula source, Formula via) { return make(Op::ReachBwd, {std::move(source), std::move(via)}); }
Formula near(Formula a) { return make(Op::Near, {std::move(a)}); }
Formula surrounded(Formula inner, Formula boundary) {
  return make(Op::Surrounded, {std::move(inner), std::move(boundary)});
}
Formula propagate(Formula source, Formula area) { return make(Op::Propagate, {std::move(source), std::move(area)}); }

}  // namespace f

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->op != b->op || a->atom != b->atom || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!equal(a->args[i], b->args[i])) return false;
  return true;
}

Formula desugar(const Formula& root) {
  std::unordered_map<const Node*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::vector<Formula> args;
    args.reserve(g->args.size());
    bool changed = false;
    for (const auto& a : g->args) {
      args.push_back(go(a));
      changed |= args.back() != a;
    }
    Formula out;
    switch (g->op) {
      case Op::Near:
        out = f::reach_bwd(args[0], f::ff());
        break;
      case Op::Surrounded:
        out = f::land(args[0], f::neg(f::reach_fwd(f::neg(f::lor(args[0], args[1])), f::neg(args[1]))));
        break;
      case Op::Propagate:
        out = f::land(args[1], f::reach_bwd(args[0], args[1]));
        break;
      default:
        out = changed ? std::make_shared<const Node>(Node{g->op, g->atom, std::move(args)}) : g;
    }
    memo.emplace(g.get(), out);
    return out;
  };
  return go(root);
}

namespace {

template <typename Pred>
bool all_nodes(const Formula& root, Pred pred) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{root.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (!pred(*n)) return false;
    for (const auto& a : n->args) stack.push_back(a.get());
  }
  return true;
}

bool is_keyword(const std::string& s) {
  static const std::unordered_set<std::string> kw{"true", "false", "reachFwd", "reachBwd",
                                                  "near", "surrounded", "propagate"};
  return kw.contains(s);
}

bool is_bare_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !is_keyword(s);
}

// Binding strength used by the printer: or < and < not/primary.
int precedence(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    default: return 3;
  }
}

void print(const Formula& g, std::string& out);

void print_child(const Formula& g, int min_prec, std::string& out) {
  const bool paren = precedence(g->op) < min_prec || (g->op == Op::And && g->args.size() < 2);
  if (paren && !(g->op == Op::And && g->args.empty())) {
    out += '(';
    print(g, out);
    out += ')';
  } else {
    print(g, out);
  }
}

void print(const Formula& g, std::string& out) {
  switch (g->op) {
    case Op::Atom:
      if (is_bare_ident(g->atom)) {
        out += g->atom;
      } else {
        out += '"';
        for (char c : g->atom) {
          if (c == '"' || c == '\\') out += '\\';
          out += c;
        }
        out += '"';
      }
      return;
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Not:
      out += '!';
      print_child(g->args[0], 3, out);
      return;
    case Op::Or:
      print_child(g->args[0], 1, out);
      out += " | ";
      print_child(g->args[1], 2, out);
      return;
    case Op::And:
      if (g->args.empty()) {
        out += "true";
        return;
      }
      if (g->args.size() == 1) {
        print(g->args[0], out);
        return;
      }
      for (std::size_t i = 0; i < g->args.size(); ++i) {
        if (i) out += " & ";
        // nested conjunctions must stay nested to round-trip
        const auto& c = g->args[i];
        if (c->op == Op::And || c->op == Op::Or) {
          out += '(';
          print(c, out);
          out += ')';
        } else {
          print_child(c, 3, out);
        }
      }
      return;
    default: break;
  }
  const char* name = nullptr;
  switch (g->op) {
    case Op::ReachFwd: name = "reachFwd"; break;
    case Op::ReachBwd: name = "reachBwd"; break;
    case Op::Near: name = "near"; break;
    case Op::Surrounded: name = "surrounded"; break;
    case Op::Propagate: name = "propagate"; break;
    default: break;
  }
  out += name;
  out += '(';
  for (std::size_t i = 0; i < g->args.size(); ++i) {
    if (i) out += ", ";
    print(g->args[i], out);
  }
  out += ')';
}

}  // namespace

bool is_sublogic_minus(const Formula& g) {
  return all_nodes(desugar(g), [](const Node& n) {
    if (n.op == Op::ReachFwd || n.op == Op::ReachBwd) return n.args[1]->op == Op::False;
    return true;
  });
}

bool is_iml(const Formula& g) {
  return all_nodes(g, [](const Node& n) {
    return n.op != Op::ReachFwd && n.op != Op::ReachBwd && n.op != Op::Surrounded && n.op != Op::Propagate;
  });
}

bool in_fragment(const Formula& g, Fragment fragment) {
  switch (fragment) {
    case Fragment::Slcs: return true;
    case Fragment::SlcsMinus: return is_sublogic_minus(g);
    case Fragment::Iml: return is_iml(g);
  }
  return false;
}

void require_fragment(const Formula& g, Fragment fragment) {
  if (in_fragment(g, fragment)) return;
  const char* name = fragment == Fragment::Iml ? "IML" : "SLCS-minus";
  throw PreconditionError(std::string("formula is outside the ") + name + " fragment: " + to_string(g));
}

std::string to_string(const Formula& g) {
  std::string out;
  print(g, out);
  return out;
}

std::size_t depth(const Formula& root) {
  std::unordered_map<const Node*, std::size_t> memo;
  std::function<std::size_t(const Formula&)> go = [&](const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::size_t d = 0;
    for (const auto& a : g->args) d = std::max(d, go(a) + 1);
    memo.emplace(g.get(), d);
    return d;
  };
  return go(root);
}

std::size_t dag_size(const Formula& root) {
  std::size_t n = 0;
  all_nodes(root, [&](const Node&) {
    ++n;
    return true;
  });
  return n;
}

std::set<std::string> atoms_of(const Formula& root) {
  std::set<std::string> out;
  all_nodes(root, [&](const Node& n) {
    if (n.op == Op::Atom) out.insert(n.atom);
    return true;
  });
  return out;
}

}  // namespace slcs
