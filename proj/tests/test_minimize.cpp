#include <doctest.h>

#include "slcs/bisim.hpp"
#include "slcs/checker.hpp"
#include "slcs/errors.hpp"
#include "slcs/io.hpp"
#include "slcs/minimize.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace slcs;

namespace {

std::vector<Model> all_grids() {
  return {testing::model_a(), testing::model_b(), testing::model_c(), testing::model_d()};
}

std::set<BlockId> image(const PointSet& s, std::span<const PointIndex> proj) {
  std::set<BlockId> out;
  s.for_each([&](PointIndex x) { out.insert(proj[x]); });
  return out;
}

std::set<BlockId> as_set(const PointSet& s) {
  const auto v = s.members();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("grid models minimise to the expected block counts") {
  const std::vector<std::size_t> expect{2, 2, 2, 3};
  const auto grids = all_grids();
  for (std::size_t i = 0; i < grids.size(); ++i) CHECK(partition_refine(grids[i]).stable().block_count() == expect[i]);
}

TEST_CASE("union of all grids has five classes") {
  const std::vector<std::string> tags{"a", "b", "c", "d"};
  const Model u = io::disjoint_union(all_grids(), tags);
  const Partition p = partition_refine(u).stable();
  CHECK(p.block_count() == 5);
  CHECK(p.same_block(u.at("a:a2"), u.at("c:c22")));
  CHECK(p.same_block(u.at("b:b11"), u.at("c:c14")));
  CHECK_FALSE(p.same_block(u.at("d:d11"), u.at("a:a1")));
}

TEST_CASE("trace shape") {
  const Model m = testing::model_d();
  const RefinementTrace t = partition_refine(m);
  REQUIRE(t.rounds.size() >= 2);
  CHECK(t.rounds[0].block_count() == 2);  // atom partition
  CHECK(t.rounds.back() == t.rounds[t.rounds.size() - 2]);
  for (std::size_t r = 1; r < t.rounds.size(); ++r) {
    CHECK(t.rounds[r].refines(t.rounds[r - 1]));
    CHECK(t.rounds[r].block_count() >= t.rounds[r - 1].block_count());
  }
}

TEST_CASE("parallel and serial refinement agree") {
  testing::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Model m = testing::random_model(rng, 1 + rng() % 40, 2, 0.08);
    const RefinementTrace a = partition_refine(m), b = partition_refine_serial(m);
    REQUIRE(a.rounds.size() == b.rounds.size());
    for (std::size_t r = 0; r < a.rounds.size(); ++r) CHECK(a.rounds[r] == b.rounds[r]);
  }
}

TEST_CASE("refinement terminates within the carrier size") {
  testing::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const Model m = testing::random_model(rng, n, 1 + rng() % 2, 0.2);
    const RefinementTrace t = partition_refine(m);
    // at most n distinct partitions, plus the repeated stable round
    CHECK(t.rounds.size() <= n + 1);
    CHECK(is_stable(m, t.stable()));
  }
}

TEST_CASE("quotient of the 4x4 grid is the two-point model") {
  const Model m = testing::model_c();
  const QuotientModel q = quotient(m, partition_refine(m).stable());
  CHECK(q.model.size() == 2);
  CHECK(q.model.edges().size() == 4);
  const Model two = testing::two_point_minimal();
  for (PointIndex x = 0; x < 2; ++x) {
    CHECK(forward_closure(q.model, x).count() == 2);
    CHECK(backward_closure(q.model, x).count() == 2);
  }
  CHECK(q.model.atoms() == two.atoms());
}

TEST_CASE("quotient by the discrete partition is a copy") {
  const Model m = testing::model_b();
  const QuotientModel q = quotient(m, Partition::discrete(m.size()));
  CHECK(q.model.size() == m.size());
  for (PointIndex x = 0; x < m.size(); ++x) {
    CHECK(q.projection[x] == x);
    CHECK(forward_closure(q.model, x) == forward_closure(m, x));
  }
}

TEST_CASE("quotient requires a stable partition") {
  const Model m = testing::model_d();
  CHECK_THROWS_AS(quotient(m, partition_refine(m).rounds[0]), PreconditionError);
}

TEST_CASE("quotient laws on random models") {
  testing::Rng rng(43);
  const auto atoms = testing::atom_names(2);
  for (int i = 0; i < 100; ++i) {
    const Model m = testing::random_model(rng, 1 + rng() % 8, 2, 0.3);
    const QuotientModel q = quotient(m, partition_refine(m).stable());
    // homomorphism: blockwise image of eta(x) is eta of the image
    for (PointIndex x = 0; x < m.size(); ++x) {
      const PointIndex qx = q.projection[x];
      CHECK(image(forward_closure(m, x), q.projection) == as_set(forward_closure(q.model, qx)));
      CHECK(image(backward_closure(m, x), q.projection) == as_set(backward_closure(q.model, qx)));
      CHECK(m.point_atom_names(x) == q.model.point_atom_names(qx));
    }
    // minimality
    CHECK(partition_refine(q.model).stable() == Partition::discrete(q.model.size()));
    // satisfaction transported through the projection
    for (int k = 0; k < 100; ++k) {
      const Formula phi = testing::random_formula(rng, atoms, 3);
      const PointSet s = sat(m, phi).sat, t = sat(q.model, phi).sat;
      for (PointIndex x = 0; x < m.size(); ++x) CHECK(s.contains(x) == t.contains(q.projection[x]));
    }
  }
}

TEST_CASE("characteristic formulas pin their blocks") {
  testing::Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    const Model m = testing::random_model(rng, 1 + rng() % 8, 2, 0.3);
    const RefinementTrace t = partition_refine(m);
    CharacteristicFormulas chi(m, t);
    for (std::size_t r = 0; r < t.rounds.size(); ++r)
      for (BlockId b = 0; b < t.rounds[r].block_count(); ++b) {
        const Formula phi = chi.formula(r, b);
        CHECK(sat(m, phi).sat == t.rounds[r].block(b));
        CHECK(is_sublogic_minus(phi));
      }
  }
}

TEST_CASE("round zero with no atoms is true everywhere") {
  const Model m({"x", "y"}, {}, {{}, {}}, {{0, 1}});
  const RefinementTrace t = partition_refine(m);
  const Formula phi = characteristic_formula(t, m, 0, 0);
  CHECK(sat(m, phi).sat == m.full_set());
  CHECK_THROWS_AS(characteristic_formula(t, m, 7, 0), std::out_of_range);
}

TEST_CASE("five classes of the combined minimal models are isolated") {
  const std::vector<Model> parts{testing::two_point_minimal(),
                                 quotient(testing::model_d(), partition_refine(testing::model_d()).stable()).model};
  const Model u = io::disjoint_union(parts);
  const RefinementTrace t = partition_refine(u);
  REQUIRE(t.stable().block_count() == 5);
  CharacteristicFormulas chi(u, t);
  const std::size_t last = t.rounds.size() - 1;
  for (BlockId b = 0; b < 5; ++b) CHECK(sat(u, chi.formula(last, b)).sat.count() == 1);
}

TEST_CASE("distinguishing formula on the asymmetric pair") {
  const Model m = testing::pointed_pairs_model();
  const auto phi = distinguishing_formula(m, m.at("x1"), m.at("x2"));
  REQUIRE(phi);
  const PointSet s = sat(m, *phi).sat;
  CHECK(s.contains(m.at("x1")));
  CHECK_FALSE(s.contains(m.at("x2")));
  CHECK(is_sublogic_minus(*phi));
  CHECK_FALSE(distinguishing_formula(m, m.at("x1"), m.at("x1")));
}

TEST_CASE("distinguishing formulas on random models") {
  testing::Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    const Model m = testing::random_model(rng, 1 + rng() % 7, 2, 0.3);
    const PointIndex x = static_cast<PointIndex>(rng() % m.size()), y = static_cast<PointIndex>(rng() % m.size());
    const auto phi = distinguishing_formula(m, x, y);
    if (phi) {
      const PointSet s = sat(m, *phi).sat;
      CHECK(s.contains(x));
      CHECK_FALSE(s.contains(y));
      CHECK(is_sublogic_minus(*phi));
    } else {
      CHECK(largest_bisimulation(m).same_block(x, y));
    }
  }
}
