#include <doctest.h>

#include "common.hpp"
#include "germoid/error.hpp"
#include "germoid/germs.hpp"
#include "oracles.hpp"

using namespace germoid;

TEST_CASE("germ classes match the common-lower-bound definition") {
  for (const auto& [name, s] : testing::presets()) {
    if (s.size() > 40) continue;
    CAPTURE(name);
    const auto u = universal_groupoid(s, false);
    std::vector<oracle::Set> space;
    for (Id f = 0; f < u.space.size(); ++f) space.push_back(oracle::up_closure(s, {u.space.min(f)}));
    const auto brute = oracle::germ_classes(s, space);
    std::set<Id> classes;
    for (const auto& [key, cls] : brute) classes.insert(cls);
    CHECK(u.groupoid().num_arrows() == classes.size());
    for (const auto& [k1, c1] : brute)
      for (const auto& [k2, c2] : brute)
        if (k1.second == k2.second)
          CHECK((c1 == c2) == (u.germs.arrow(k1.first, k1.second) == u.germs.arrow(k2.first, k2.second)));
    CHECK(oracle::groupoid_axioms(u.groupoid()));
  }
}

TEST_CASE("every constructed groupoid satisfies the axioms") {
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    CHECK(oracle::groupoid_axioms(universal_groupoid(s, false).groupoid()));
    if (!s.has_zero()) continue;
    CHECK(oracle::groupoid_axioms(universal_groupoid(s, true).groupoid()));
    CHECK(oracle::groupoid_axioms(tight_groupoid(s).germs.groupoid));
  }
}

TEST_CASE("universal groupoid sizes") {
  CHECK(universal_groupoid(fixtures::preset("chain2"), false).groupoid().num_arrows() == 2);
  CHECK(universal_groupoid(fixtures::preset("s3"), false).groupoid().num_arrows() == 3);
  CHECK(universal_groupoid(fixtures::preset("s4"), false).groupoid().num_arrows() == 4);
  CHECK(universal_groupoid(fixtures::preset("sd6"), false).groupoid().num_arrows() == 6);
  const auto b2 = fixtures::preset("b2");
  const auto contracted = universal_groupoid(b2, true);
  CHECK(contracted.groupoid().num_units() == 2);
  CHECK(contracted.groupoid().num_arrows() == 4);
  const auto tight = tight_groupoid(b2);
  CHECK(tight.germs.groupoid.num_arrows() == 4);
  CHECK(find_isomorphism(tight.germs.groupoid, pair_groupoid(2)));
  CHECK(find_isomorphism(contracted.groupoid(), pair_groupoid(2)));
  CHECK_THROWS_AS(tight_groupoid(fixtures::preset("s3")), Error);
}

TEST_CASE("I⊥ is β-invariant and the reduction matches the quotient") {
  std::size_t checked = 0;
  for (const auto& [name, s] : testing::presets_with_zero()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const auto space = CharSpace::of(s, true);
    for (const auto& ideal : enumerate_ideals(s)) {
      CAPTURE(ideal);
      const auto perp = ideal_perp(space, ideal);
      const std::set<Id> in(perp.begin(), perp.end());
      for (Id a = 0; a < s.size(); ++a)
        for (Id f : perp) {
          const auto image = oracle::beta(s, a, oracle::up_closure(s, {space.min(f)}));
          if (!image) continue;
          const Id m = *std::find_if(image->begin(), image->end(), [&](Id x) {
            return std::all_of(image->begin(), image->end(), [&](Id y) { return s.mul(x, y) == x; });
          });
          CHECK(in.count(*space.filter_of(m)));
        }
      CHECK(verify_reduction_iso(s, ideal).holds);
      ++checked;
    }
  }
  CHECK(checked > 0);
  const auto b2 = fixtures::preset("b2");
  CHECK_THROWS_AS(ideal_perp(CharSpace::of(b2, true), std::vector<Id>{}), Error);
  CHECK_THROWS_AS(ideal_perp(CharSpace::of(b2, true), std::vector<Id>{1}), Error);
}

TEST_CASE("actions and groupoid spaces correspond") {
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    const auto beta = beta_action(CharSpace::of(s, false));
    const auto r = verify_equiv_roundtrip(beta);
    CHECK(r.roundtrip);
    CHECK(r.isomorphic);
    CHECK(r.germ_arrows == r.product_arrows);
  }
}

TEST_CASE("induced functors of locally idempotent pure morphisms are faithful") {
  std::size_t checked = 0;
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    for (const auto& phi : {sigma_morphism(s), SemigroupMorphism::identity(s)}) {
      if (!is_locally_idempotent_pure(phi)) continue;
      CHECK(cocycle_faithfulness_map(induced_functor(phi).functor).injective);
      ++checked;
    }
  }
  CHECK(checked > 0);
}
