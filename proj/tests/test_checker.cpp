#include <doctest.h>

#include "slcs/checker.hpp"
#include "slcs/errors.hpp"
#include "slcs/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace slcs;

namespace {

Model line_model() {
  return Model::from_names({"a", "b", "c"}, {{"red"}, {"blue"}, {"green"}},
                           {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
}

PointSet ids(const Model& m, std::initializer_list<const char*> names) {
  PointSet s(m.size());
  for (const char* n : names) s.insert(m.at(n));
  return s;
}

}  // namespace

TEST_CASE("centre of the 5x5 grid") {
  const Model m = testing::model_d();
  const PointIndex d33 = m.at("d33");
  CHECK(sat(m, parse("reachFwd(blue, red)")).sat.contains(d33));
  const PointSet near_blue = sat(m, parse("near(blue)")).sat;
  CHECK_FALSE(near_blue.contains(d33));
  CHECK(near_blue == (m.full_set() - ids(m, {"d33"})));
  CHECK(near_blue.count() == 24);
}

TEST_CASE("red points of the smaller grids see blue") {
  for (const Model& m : {testing::model_a(), testing::model_b(), testing::model_c()}) {
    const PointSet red = m.atom_points("red");
    CHECK(red.is_subset_of(sat(m, parse("near(blue)")).sat));
  }
}

TEST_CASE("trivial satisfaction sets") {
  const Model m = testing::model_b();
  CHECK(sat(m, f::ff()).sat.empty());
  CHECK(sat(m, f::tt()).sat == m.full_set());
  CHECK(sat(m, f::land({})).sat == m.full_set());
}

TEST_CASE("surrounded on a line") {
  const Model m = line_model();
  CHECK(sat(m, parse("surrounded(red, blue)")).sat == ids(m, {"a"}));
  CHECK(sat_oracle(m, parse("surrounded(red, blue)")).sat == ids(m, {"a"}));
}

TEST_CASE("unknown atom evaluates to empty with a warning") {
  const Model m = line_model();
  const SatResult r = sat(m, parse("purple | red"));
  CHECK(r.sat == ids(m, {"a"}));
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("purple") != std::string::npos);
}

TEST_CASE("backward reach separates the asymmetric pair") {
  const Model m = testing::pointed_pairs_model();
  const Formula phi = parse("reachBwd(p, false)");
  const PointSet s = sat_oracle(m, phi).sat;
  CHECK(s.contains(m.at("x1")));
  CHECK_FALSE(s.contains(m.at("x2")));
  CHECK(sat(m, phi).sat == s);
  const std::vector<Formula> corpus{phi};
  CHECK_FALSE(logically_equivalent(m, m.at("x1"), m.at("x2"), corpus));
  CHECK(logically_equivalent(m, m.at("x1"), m.at("x2"), {}));
}

TEST_CASE("zero-length witness") {
  const Model m({"only"}, {}, {{}}, {});
  CHECK(sat_oracle(m, parse("reachFwd(true, true)")).sat == m.full_set());
  CHECK(sat_oracle(m, parse("reachBwd(true, false)")).sat == m.full_set());
}

TEST_CASE("oracle size limit") {
  testing::Rng rng(1);
  const Model m = testing::random_model(rng, kOracleMaxPoints + 1, 1, 0.2);
  CHECK_THROWS_AS(sat_oracle(m, f::tt()), SizeLimitError);
}

TEST_CASE("malformed nodes are rejected") {
  auto bad = std::make_shared<const Node>(Node{Op::Not, "", {}});
  CHECK_THROWS_AS(sat(testing::model_a(), bad), PreconditionError);
}

TEST_CASE("set checker matches the path oracle on random inputs") {
  testing::Rng rng(21);
  const auto atoms = testing::atom_names(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Model m = testing::random_model(rng, 1 + rng() % 6, 2, 0.35);
    const Formula phi = testing::random_formula(rng, atoms, 4);
    CHECK_MESSAGE(sat(m, phi).sat == sat_oracle(m, phi).sat, to_string(phi));
  }
}

TEST_CASE("near is closure and one-step reach is closure backward") {
  testing::Rng rng(22);
  const auto atoms = testing::atom_names(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Model m = testing::random_model(rng, 1 + rng() % 8, 2, 0.3);
    const Formula phi = testing::random_formula(rng, atoms, 3);
    const PointSet s = sat(m, phi).sat;
    CHECK(sat(m, f::near(phi)).sat == closure(m, s));
    PointSet expect(m.size());
    for (PointIndex x = 0; x < m.size(); ++x)
      if (forward_closure(m, x).intersects(s)) expect.insert(x);
    CHECK(sat(m, f::reach_fwd(phi, f::ff())).sat == expect);
  }
}

TEST_CASE("reach fixpoint iterates are monotone and short") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Model m = testing::random_model(rng, n, 2, 0.25);
    const PointSet s1 = m.atom_points("a"), s2 = m.atom_points("b");
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const auto it = detail::reach_iterates(m, s1, s2, dir);
      // the first repeat appears after at most n + 1 steps
      CHECK(it.size() <= n + 2);
      for (std::size_t i = 1; i < it.size(); ++i) CHECK(it[i - 1].is_subset_of(it[i]));
      const PointSet pre_b = dir == Direction::Forward ? closure_backward(m, it.back()) : closure(m, it.back());
      CHECK(detail::reach(m, s1, s2, dir) == pre_b);
    }
  }
}
