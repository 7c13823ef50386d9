#include <doctest.h>

#include <random>

#include "common.hpp"
#include "germoid/error.hpp"
#include "oracles.hpp"

using namespace germoid;

namespace {

bool same_partition(const std::vector<Id>& a, const std::vector<Id>& b) {
  for (Id x = 0; x < a.size(); ++x)
    for (Id y = 0; y < a.size(); ++y)
      if ((a[x] == a[y]) != (b[x] == b[y])) return false;
  return true;
}

// Associativity and unique inverses by direct search.
bool inverse_semigroup_axioms(const std::vector<std::vector<Id>>& t) {
  const std::size_t n = t.size();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  for (Id a = 0; a < n; ++a) {
    std::size_t inverses = 0;
    for (Id b = 0; b < n; ++b)
      if (t[t[a][b]][a] == a && t[t[b][a]][b] == b) ++inverses;
    if (inverses != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validator rejects broken tables") {
  CHECK_THROWS_AS(InvSemigroup::validate({"a", "b"}, {{0, 1}, {0, 1}}), Error);
  try {
    InvSemigroup::validate({"a", "b"}, {{1, 0}, {0, 0}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAssociative);
  }
  // Left-zero band: associative, but b is an inverse of a too.
  try {
    InvSemigroup::validate({"a", "b"}, {{0, 0}, {1, 1}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoUniqueInverse);
  }
  CHECK_THROWS_AS(InvSemigroup::validate({"a"}, {{0, 0}}), Error);
}

TEST_CASE("generator sizes") {
  CHECK(fixtures::chain(3).size() == 3);
  CHECK(fixtures::brandt(FiniteGroup::trivial(), 2).size() == 5);
  CHECK(fixtures::brandt(FiniteGroup::from(fixtures::cyclic_group(2)), 2).size() == 9);
  CHECK(fixtures::symmetric_inverse(2).size() == 7);
  CHECK(fixtures::symmetric_inverse(3).size() == 34);
  CHECK(fixtures::preset("sd6").size() == 6);
}

TEST_CASE("σ matches the least group congruence") {
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    const auto sigma = max_group_image(s);
    const auto cls = oracle::sigma_classes(s);
    CHECK(same_partition(sigma.classmap, cls));
    CHECK(sigma.group.size() == *std::max_element(cls.begin(), cls.end()) + 1);
    CHECK(is_e_unitary(s) == oracle::e_unitary(s));
  }
}

TEST_CASE("meet_sigma agrees with the brute-force meet") {
  std::size_t pairs = 0;
  for (const auto& [name, s] : testing::e_unitary_presets()) {
    CAPTURE(name);
    const auto sigma = max_group_image(s);
    for (Id a = 0; a < s.size(); ++a)
      for (Id b = 0; b < s.size(); ++b)
        if (sigma(a) == sigma(b)) {
          CHECK(meet_sigma(s, a, b) == oracle::meet(s, a, b));
          ++pairs;
        }
  }
  CHECK(pairs > 0);
  CHECK_THROWS_AS(meet_sigma(fixtures::preset("b2"), 1, 2), Error);
}

TEST_CASE("ideals are enumerated exhaustively") {
  for (const auto& [name, s] : testing::presets()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    std::size_t brute = 0;
    for (unsigned long mask = 1; mask + 1 < (1ul << s.size()); ++mask) {
      bool ideal = true;
      for (Id x = 0; x < s.size() && ideal; ++x)
        if (mask >> x & 1)
          for (Id y = 0; y < s.size() && ideal; ++y)
            ideal = (mask >> s.mul(x, y) & 1) && (mask >> s.mul(y, x) & 1);
      brute += ideal;
    }
    const auto ideals = enumerate_ideals(s);
    CHECK(ideals.size() == brute);
    for (const auto& i : ideals) CHECK(is_ideal(s, i));
  }
}

TEST_CASE("Rees quotient of B2 by its zero ideal") {
  const auto s = fixtures::preset("i2");
  const auto ideals = enumerate_ideals(s);
  REQUIRE_FALSE(ideals.empty());
  for (const auto& i : ideals) {
    const auto q = rees_quotient(s, i);
    CHECK(q.quotient.size() == s.size() - i.size() + 1);
    CHECK(q.quotient.has_zero());
  }
}

TEST_CASE("σ is idempotent pure exactly for E-unitary semigroups") {
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    CHECK(is_idempotent_pure(sigma_morphism(s)) == is_e_unitary(s));
  }
}

TEST_CASE("E-unitary cover of B2 over ℤ/2") {
  const auto b2 = fixtures::preset("b2");
  const auto z2 = FiniteGroup::from(fixtures::cyclic_group(2));
  std::vector<Id> map(b2.size(), 0);
  map[testing::id(b2, "e12")] = 1;
  map[testing::id(b2, "e21")] = 1;
  const auto theta = PartialGroupHom::validate(b2, z2, map);
  CHECK(is_idempotent_pure(theta));
  const auto cover = eunitary_cover(theta);
  CHECK(is_e_unitary(cover.cover));
  CHECK(cover.quotient.quotient.size() == b2.size());
  std::vector<Id> bad(b2.size(), 0);
  CHECK_THROWS_AS(eunitary_cover(PartialGroupHom::validate(b2, FiniteGroup::trivial(), bad)), Error);
}

TEST_CASE("property: random table mutations agree with the axioms") {
  std::mt19937_64 rng(20261015);
  std::size_t rejected = 0, trials = 0;
  for (const auto& [name, s] : testing::presets()) {
    if (s.size() > 12) continue;
    for (int k = 0; k < 40; ++k, ++trials) {
      auto t = s.table();
      const Id a = rng() % s.size(), b = rng() % s.size();
      t[a][b] = (t[a][b] + 1 + rng() % (s.size() - 1 + (s.size() == 1))) % s.size();
      bool accepted = true;
      try {
        InvSemigroup::validate(s.names(), t);
      } catch (const Error&) {
        accepted = false;
      }
      CHECK(accepted == inverse_semigroup_axioms(t));
      rejected += !accepted;
    }
  }
  CHECK(rejected > trials / 2);
}
