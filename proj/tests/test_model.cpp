#include <doctest.h>

#include "slcs/errors.hpp"
#include "slcs/model.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace slcs;

TEST_CASE("model validation") {
  CHECK_THROWS_AS(Model({}, {}, {}, {}), ValidationError);
  CHECK_THROWS_AS(Model({"a", "a"}, {}, {{}, {}}, {}), ValidationError);
  CHECK_THROWS_AS(Model({"a"}, {"p", "p"}, {{}}, {}), ValidationError);
  CHECK_THROWS_AS(Model({"a"}, {"p"}, {{3}}, {}), ValidationError);
  CHECK_THROWS_AS(Model({"a"}, {}, {{}}, {{0, 1}}), ValidationError);
  CHECK_THROWS_WITH_AS(Model::from_names({"a"}, {{}}, {{"a", "b"}}), doctest::Contains("dangling edge"),
                       ValidationError);
}

TEST_CASE("edges are stored as given, without completion") {
  const Model m = Model::from_names({"u", "v"}, {{}, {}}, {{"u", "v"}, {"u", "v"}});
  REQUIRE(m.edges().size() == 1);
  CHECK(m.successors(m.at("u")).size() == 1);
  CHECK(m.successors(m.at("v")).empty());
  CHECK(m.predecessors(m.at("v")).size() == 1);
}

TEST_CASE("atoms are interned in sorted order") {
  const Model m = Model::from_names({"x", "y"}, {{"red"}, {"blue", "red"}}, {}, {"green"});
  CHECK(m.atoms() == std::vector<std::string>{"blue", "green", "red"});
  CHECK(m.point_atom_names(m.at("y")) == std::vector<std::string>{"blue", "red"});
  CHECK(m.atom_points("green").empty());
  CHECK(m.atom_points("nonexistent").empty());
  CHECK(m.label_class(0) != m.label_class(1));
  CHECK(m.label_class_count() == 2);
}

TEST_CASE("closure of the 1x3 strip") {
  const Model m = testing::model_a();
  const PointIndex a1 = m.at("a1"), a2 = m.at("a2"), a3 = m.at("a3");
  CHECK(forward_closure(m, a1).members() == std::vector<PointIndex>{a1, a2});
  CHECK(forward_closure(m, a2).count() == 3);
  PointSet s(3);
  s.insert(a1);
  CHECK(interior(m, s).empty());
  CHECK(interior(m, m.full_set()) == m.full_set());
  (void)a3;
}

TEST_CASE("closure on the asymmetric two-component model") {
  const Model m = testing::pointed_pairs_model();
  const PointIndex x1 = m.at("x1"), y1 = m.at("x1'");
  CHECK(forward_closure(m, y1).members() == std::vector<PointIndex>{x1, y1});
  CHECK(forward_closure(m, x1).members() == std::vector<PointIndex>{x1});
  CHECK(backward_closure(m, x1).members() == std::vector<PointIndex>{x1, y1});
}

TEST_CASE("single point model") {
  const Model m({"only"}, {}, {{}}, {});
  CHECK(closure(m, m.empty_set()).empty());
  CHECK(closure(m, m.full_set()) == m.full_set());
}

TEST_CASE("closure axioms hold on random models") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Model m = testing::random_model(rng, n, 2, 0.3);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    auto set_of = [&](std::uint64_t bits) {
      PointSet s(n);
      for (PointIndex x = 0; x < n; ++x)
        if (bits >> x & 1) s.insert(x);
      return s;
    };
    CHECK(closure(m, m.empty_set()).empty());
    for (int k = 0; k < 20; ++k) {
      const PointSet a = set_of(rng() % subsets), b = set_of(rng() % subsets);
      const PointSet ca = closure(m, a);
      CHECK(a.is_subset_of(ca));
      CHECK(closure(m, a | b) == (ca | closure(m, b)));
      CHECK(interior(m, a) == closure(m, a.complement()).complement());
      CHECK(closure(m, a) == interior(m, a.complement()).complement());
      CHECK(closure_backward(m, a) == closure(m.reversed(), a));
      // pointwise definition
      for (PointIndex x = 0; x < n; ++x) {
        bool expect = a.contains(x);
        for (PointIndex y : m.predecessors(x)) expect = expect || a.contains(y);
        CHECK(ca.contains(x) == expect);
      }
    }
  }
}

TEST_CASE("path prefixes allow stuttering") {
  const Model m = testing::model_a();
  const std::vector<PointIndex> ok{0, 0, 1, 2, 2, 1};
  const std::vector<PointIndex> bad{0, 2};
  CHECK(is_path_prefix(m, ok));
  CHECK_FALSE(is_path_prefix(m, bad));
}
