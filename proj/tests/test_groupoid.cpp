#include <doctest.h>

#include "common.hpp"
#include "germoid/error.hpp"
#include "germoid/groupoid.hpp"
#include "oracles.hpp"

using namespace germoid;

TEST_CASE("basic groupoids satisfy the axioms") {
  const auto z3 = FiniteGroup::from(fixtures::cyclic_group(3));
  for (const auto& g : {pair_groupoid(3), unit_groupoid(4), group_as_groupoid(z3)}) CHECK(oracle::groupoid_axioms(g));
  CHECK(pair_groupoid(3).num_arrows() == 9);
  CHECK(pair_groupoid(3).orbits().size() == 1);
  CHECK(unit_groupoid(4).orbits().size() == 4);
}

TEST_CASE("validation rejects broken data") {
  auto data = pair_groupoid(2).data();
  data.inv.pop_back();
  CHECK_THROWS_AS(FiniteGroupoid::validate(data), Error);
  auto bad = pair_groupoid(2).data();
  bad.comp.front()[2] = bad.comp.front()[2] == 0 ? 1 : 0;
  CHECK_THROWS_AS(FiniteGroupoid::validate(bad), Error);
}

TEST_CASE("isomorphism search") {
  const auto g = pair_groupoid(2);
  const auto iso = find_isomorphism(g, pair_groupoid(2));
  REQUIRE(iso);
  CHECK(verify_isomorphism(*iso));
  CHECK_FALSE(find_isomorphism(g, unit_groupoid(2)));
  const auto z4 = group_as_groupoid(FiniteGroup::from(fixtures::cyclic_group(4)));
  const auto v4 = group_as_groupoid(
      FiniteGroup::from(fixtures::direct_product(fixtures::cyclic_group(2), fixtures::cyclic_group(2))));
  CHECK_FALSE(find_isomorphism(z4, v4));
}

TEST_CASE("reduction is a full subgroupoid") {
  const auto g = pair_groupoid(3);
  const auto r = reduction(g, {2, 0});
  CHECK(r.groupoid.num_units() == 2);
  CHECK(r.groupoid.num_arrows() == 4);
  CHECK(oracle::groupoid_axioms(r.groupoid));
  CHECK(functor_report(r.inclusion).weak_equivalence);
  const auto split = reduction(unit_groupoid(3), {0});
  CHECK(functor_report(split.inclusion).fully_faithful);
  CHECK_FALSE(functor_report(split.inclusion).essentially_surjective);
  CHECK_THROWS_AS(reduction(g, {5}), Error);
}

TEST_CASE("functor reports") {
  // ℤ/2 collapsed onto the trivial group: full, not faithful.
  const auto z2 = group_as_groupoid(FiniteGroup::from(fixtures::cyclic_group(2)));
  const auto point = unit_groupoid(1);
  const auto f = GroupoidFunctor::validate(z2, point, {0}, {0, 0});
  const auto r = functor_report(f);
  CHECK(r.full);
  CHECK_FALSE(r.faithful);
  CHECK_THROWS_AS(enveloping_action_of_functor(f), Error);
  // Pair groupoid over a point is faithful, since (r, d) separates arrows.
  const auto g = pair_groupoid(2);
  CHECK(functor_report(GroupoidFunctor::validate(g, point, {0, 0}, {0, 0, 0, 0})).faithful);
  // The unit inclusion into the pair groupoid is a weak equivalence.
  const auto inc = GroupoidFunctor::validate(point, g, {1}, {g.identity(1)});
  CHECK(functor_report(inc).weak_equivalence);
}

TEST_CASE("enveloping action of a faithful functor") {
  // Two units mapped onto one group element each: X has |G| points per orbit.
  const auto z2 = group_as_groupoid(FiniteGroup::from(fixtures::cyclic_group(2)));
  const auto g = unit_groupoid(2);
  const auto f = GroupoidFunctor::validate(g, z2, {0, 0}, {0, 0});
  const auto env = enveloping_action_of_functor(f);
  CHECK(env.action.num_points() == 4);
  CHECK(env.product.groupoid.num_arrows() == 8);
  CHECK(env.alpha_report.weak_equivalence);
  CHECK(env.projection_matches);
  CHECK(oracle::groupoid_axioms(env.product.groupoid));
}
