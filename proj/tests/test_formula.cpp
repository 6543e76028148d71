#include <doctest.h>

#include "slcs/errors.hpp"
#include "slcs/formula.hpp"
#include "slcs/parser.hpp"
#include "support/generators.hpp"

using namespace slcs;

TEST_CASE("desugar near") {
  const Formula d = desugar(f::near(f::atom("p")));
  CHECK(equal(d, f::reach_bwd(f::atom("p"), f::ff())));
  CHECK(equal(desugar(f::atom("p")), f::atom("p")));
}

TEST_CASE("desugar surrounded and propagate") {
  const Formula p = f::atom("p"), q = f::atom("q");
  CHECK(equal(desugar(f::surrounded(p, q)),
              f::land(p, f::neg(f::reach_fwd(f::neg(f::lor(p, q)), f::neg(q))))));
  CHECK(equal(desugar(f::propagate(p, q)), f::land(q, f::reach_bwd(p, q))));
}

TEST_CASE("desugar is idempotent and leaves only core nodes") {
  testing::Rng rng(3);
  const auto atoms = testing::atom_names(3);
  for (int i = 0; i < 500; ++i) {
    const Formula g = testing::random_formula(rng, atoms, 5);
    const Formula d = desugar(g);
    CHECK(equal(desugar(d), d));
    std::vector<Formula> stack{d};
    while (!stack.empty()) {
      Formula n = stack.back();
      stack.pop_back();
      CHECK(n->op != Op::Near);
      CHECK(n->op != Op::Surrounded);
      CHECK(n->op != Op::Propagate);
      for (const auto& a : n->args) stack.push_back(a);
    }
  }
}

TEST_CASE("desugar preserves sharing") {
  const Formula shared = f::near(f::atom("p"));
  const Formula g = f::land(shared, f::neg(shared));
  const Formula d = desugar(g);
  CHECK(d->args[0].get() == d->args[1]->args[0].get());
  CHECK(dag_size(d) == 5);
}

TEST_CASE("sublogic minus membership") {
  const Formula p = f::atom("p"), q = f::atom("q");
  CHECK(is_sublogic_minus(f::reach_bwd(p, f::ff())));
  CHECK(is_sublogic_minus(p));
  CHECK_FALSE(is_sublogic_minus(f::reach_fwd(p, q)));
  CHECK(is_sublogic_minus(f::near(f::neg(p))));
  CHECK_FALSE(is_sublogic_minus(f::propagate(p, q)));
  CHECK_THROWS_AS(require_fragment(f::reach_fwd(p, q), Fragment::SlcsMinus), PreconditionError);
}

TEST_CASE("near-only fragment") {
  const Formula p = f::atom("p");
  CHECK(is_iml(f::land(p, f::neg(f::near(p)))));
  CHECK_FALSE(is_iml(f::reach_bwd(p, f::ff())));
  CHECK_FALSE(is_iml(f::surrounded(p, p)));
  CHECK_NOTHROW(require_fragment(f::near(p), Fragment::Iml));
  CHECK_THROWS_AS(require_fragment(f::propagate(p, p), Fragment::Iml), PreconditionError);
}

TEST_CASE("depth and atoms") {
  const Formula g = f::land(f::atom("b"), f::near(f::neg(f::atom("a"))));
  CHECK(depth(g) == 3);
  CHECK(atoms_of(g) == std::set<std::string>{"a", "b"});
  CHECK(depth(f::tt()) == 0);
}

TEST_CASE("printer output") {
  CHECK(to_string(f::land(f::atom("blue"), f::near(f::atom("red")))) == "blue & near(red)");
  CHECK(to_string(f::atom("#ff0000")) == "\"#ff0000\"");
  CHECK(to_string(f::atom("near")) == "\"near\"");
  CHECK(to_string(f::land({})) == "true");
  CHECK(to_string(f::neg(f::lor(f::atom("a"), f::atom("b")))) == "!(a | b)");
}

TEST_CASE("print and parse round-trip") {
  testing::Rng rng(5);
  const std::vector<std::string> atoms{"a", "b", "#00ff00", "true"};
  for (int i = 0; i < 1000; ++i) {
    const Formula g = testing::random_formula(rng, atoms, 5);
    const std::string text = to_string(g);
    const Formula back = parse(text);
    CHECK_MESSAGE(equal(back, g), text);
  }
}
