#include <doctest.h>

#include "common.hpp"
#include "germoid/error.hpp"
#include "germoid/matrixrep.hpp"
#include "mutation.hpp"
#include "oracles.hpp"

using namespace germoid;

TEST_CASE("left regular representation") {
  for (const auto& [name, s] : testing::presets()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const auto l = left_regular_rep<int>(s);
    for (Id x = 0; x < s.size(); ++x) {
      CHECK(l[s.star(x)] == l[x].transpose());
      CHECK(((l[x].array() == 0) || (l[x].array() == 1)).all());
      for (Id y = 0; y < s.size(); ++y) CHECK(l[x] * l[y] == l[s.mul(x, y)]);
    }
  }
  const auto b2 = fixtures::preset("b2");
  const auto l = left_regular_rep<int>(b2);
  const auto e12 = l[testing::id(b2, "e12")];
  CHECK(e12.sum() == 3);  // the zero column counts too: δ_0 ↦ δ_0
  CHECK(e12(testing::id(b2, "e11"), testing::id(b2, "e21")) == 1);
  CHECK(e12(testing::id(b2, "e12"), testing::id(b2, "e22")) == 1);
}

TEST_CASE("U is an isometry and intertwines") {
  for (const auto& [name, s] : testing::e_unitary_presets()) {
    CAPTURE(name);
    const auto u = intertwiner_u<int>(s);
    CHECK(u.transpose() * u == DenseMatrix<int>::Identity(u.cols(), u.cols()));
    const auto r = verify_intertwining(s);
    CHECK(r.isometry);
    CHECK(r.intertwines);
    CHECK(r.conditions_agree);
    CHECK(r.routes_agree);
    CHECK(r.star_representations);
  }
  CHECK_THROWS_AS(intertwiner_u<int>(fixtures::preset("b2")), Error);
}

TEST_CASE("mutations of U and Λ are always caught") {
  for (const auto& [name, s] : testing::e_unitary_presets()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const auto st = mutation::run(s);
    CHECK(st.u.detected == st.u.total);
    CHECK(st.lambda.detected == st.lambda.total);
    CHECK(st.a_in_range.detected == st.a_in_range.total);
  }
}

TEST_CASE("some A flips off range(U) leave a valid intertwined family") {
  // In S3 the vector δ_1 ⊗ δ_ḡ is orthogonal to range(U) and every A_s kills
  // it, so toggling the diagonal entry of A_1 there changes nothing visible.
  const auto st = mutation::run(fixtures::preset("s3"));
  CHECK(st.a_off_range.detected < st.a_off_range.total);
}

TEST_CASE("convolution algebras and centers") {
  const ConvolutionAlgebra m2(pair_groupoid(2));
  CHECK(m2.dimension() == 4);
  CHECK(m2.verify());
  CHECK(center_dimension(m2) == 1);
  CHECK(center_dimension(ConvolutionAlgebra(unit_groupoid(5))) == 5);
  const ConvolutionAlgebra z2(group_as_groupoid(FiniteGroup::from(fixtures::cyclic_group(2))));
  CHECK(z2.dimension() == 2);
  CHECK(center_dimension(z2) == 2);
  const auto sd6 = universal_groupoid(fixtures::preset("sd6"), false).groupoid();
  CHECK(center_dimension(ConvolutionAlgebra(sd6)) == 3);

  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    const auto g = universal_groupoid(s, false).groupoid();
    const ConvolutionAlgebra a(g);
    CHECK(a.verify());
    CHECK(center_dimension(a) == oracle::center_dimension(g));
  }
}

TEST_CASE("convolution matches matrix units on the pair groupoid") {
  const auto g = pair_groupoid(2);
  const ConvolutionAlgebra a(g);
  for (Id x = 0; x < 4; ++x)
    for (Id y = 0; y < 4; ++y) {
      Eigen::VectorXcd dx = Eigen::VectorXcd::Unit(4, x), dy = Eigen::VectorXcd::Unit(4, y);
      const Id xy = g.compose(x, y);
      const Eigen::VectorXcd expected = xy == kNone ? Eigen::VectorXcd(Eigen::VectorXcd::Zero(4))
                                                    : Eigen::VectorXcd(Eigen::VectorXcd::Unit(4, xy));
      CHECK(a.multiply(dx, dy) == expected);
      CHECK(a.left_multiplication(x) * dy == a.multiply(dx, dy));
    }
}

TEST_CASE("algebra maps from isomorphisms") {
  const auto check = verify_main1(fixtures::preset("s4"));
  const auto map = algebra_map_from_functor(*check.phi);
  CHECK(map.homomorphism);
  CHECK(map.preserves_involution);
  CHECK(map.matrix.rows() == 4);
  CHECK(center_dimension(ConvolutionAlgebra(check.universal.groupoid())) ==
        center_dimension(ConvolutionAlgebra(check.product.groupoid)));
  const auto id = algebra_map_from_functor(GroupoidFunctor::identity(pair_groupoid(2)));
  CHECK(id.matrix == ComplexMatrix::Identity(4, 4));
  const auto g = pair_groupoid(2);
  CHECK_THROWS_AS(algebra_map_from_functor(GroupoidFunctor::validate(g, unit_groupoid(1), {0, 0}, {0, 0, 0, 0})),
                  Error);
}

TEST_CASE("Gelfand check") {
  const auto c2 = gelfand_check(fixtures::preset("chain2"));
  CHECK(c2.holds());
  CHECK(c2.rank == 2);
  CHECK(gelfand_check(fixtures::preset("trivial")).rank == 1);
  CHECK(gelfand_check(fixtures::preset("sd6")).rank == 3);
  for (const auto& [name, s] : testing::presets()) {
    CAPTURE(name);
    CHECK(gelfand_check(s).holds());
  }
}
