#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "germoid/error.hpp"
#include "germoid/germs.hpp"
#include "germoid/matrixrep.hpp"
#include "germoid/partact.hpp"
#include "mutation.hpp"
#include "oracles.hpp"

using namespace germoid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  std::string id;
  bool pass = true;
  // Set when the only failing part is a claim recorded as unattainable.
  bool documented = false;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::vector<InvSemigroup> random_fixtures(std::size_t n) {
  std::mt19937_64 rng(0x5eed);
  std::vector<InvSemigroup> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fixtures::random_semidirect(rng, 64));
  return out;
}

std::vector<testing::Named> corpus() {
  auto all = testing::presets();
  all.push_back({"b3", fixtures::brandt(FiniteGroup::trivial(), 3)});
  all.push_back({"b2z2", fixtures::brandt(FiniteGroup::from(fixtures::cyclic_group(2)), 2)});
  all.push_back({"chain3z", fixtures::chain(3, true)});
  return all;
}

bool is_semilattice(const InvSemigroup& s) { return s.idempotents().size() == s.size(); }
bool is_group(const InvSemigroup& s) { return s.idempotents().size() == 1; }

void ac1(Line& l) {
  const auto start = Clock::now();
  std::size_t passed = 0, total = 0;
  auto run = [&](const std::string& name, const InvSemigroup& s) {
    ++total;
    const auto c = verify_main1(s);
    if (c.holds) ++passed;
    else l.require(false, name);
    return c;
  };
  const auto s4 = run("s4", fixtures::preset("s4"));
  const auto sd6 = run("sd6", fixtures::preset("sd6"));
  l.require(s4.universal.groupoid().num_arrows() == 4 && s4.product.groupoid.num_arrows() == 4, "S4 arrow counts");
  l.require(sd6.universal.groupoid().num_arrows() == 6 && sd6.product.groupoid.num_arrows() == 6, "SD6 arrow counts");
  for (const auto& [name, s] : testing::presets())
    if (is_semilattice(s) || is_group(s)) run(name, s);
  std::size_t max_size = 0;
  for (const auto& s : random_fixtures(50)) {
    max_size = std::max(max_size, s.size());
    run("random", s);
  }
  const double t = seconds_since(start);
  l.require(max_size <= 64, "random fixtures exceed 64 elements");
  l.require(t < 10, "runtime");
  l.detail << passed << "/" << total << " fixtures, S4 4=4 arrows, SD6 6=6 arrows, largest random |S|=" << max_size
           << ", " << t << " s";
}

void ac2(Line& l) {
  const auto start = Clock::now();
  std::size_t passed = 0, total = 0;
  for (const auto& [name, s] : testing::e_unitary_presets()) {
    ++total;
    const bool ok = verify_intertwining(s).holds();
    passed += ok;
    l.require(ok, name);
  }
  for (const auto& s : random_fixtures(50)) {
    ++total;
    const bool ok = verify_intertwining(s).holds();
    passed += ok;
    l.require(ok, "random");
  }
  mutation::Stats all;
  for (const auto& [name, s] : testing::e_unitary_presets()) {
    if (s.size() > 12) continue;
    const auto st = mutation::run(s);
    for (auto [into, from] : {std::pair{&all.u, &st.u}, {&all.lambda, &st.lambda}, {&all.a, &st.a},
                              {&all.a_in_range, &st.a_in_range}, {&all.a_off_range, &st.a_off_range}}) {
      into->total += from->total;
      into->detected += from->detected;
    }
  }
  const double t = seconds_since(start);
  l.require(t < 10, "runtime");
  l.require(all.u.detected == all.u.total, "a U mutation went undetected");
  l.require(all.lambda.detected == all.lambda.total, "a Λ mutation went undetected");
  l.require(all.a_in_range.detected == all.a_in_range.total, "an A mutation on range(U) went undetected");
  l.detail << passed << "/" << total << " fixtures intertwine exactly; mutations caught: U " << all.u.detected << "/"
           << all.u.total << ", Λ " << all.lambda.detected << "/" << all.lambda.total << ", A " << all.a.detected
           << "/" << all.a.total << " (on range(U) " << all.a_in_range.detected << "/" << all.a_in_range.total
           << ", off range(U) " << all.a_off_range.detected << "/" << all.a_off_range.total << "), " << t << " s";
  if (l.pass && all.a.detected != all.a.total) {
    // Flips of A in columns orthogonal to range(U) can leave a *-representation
    // that U still intertwines; no check on (U, Λ, A) can see them.
    l.pass = false;
    l.documented = true;
    l.detail << " [unattainable: some single-entry A mutations off range(U) are invisible to the intertwining check]";
  }
}

void ac3(Line& l) {
  std::size_t ideals = 0, fixtures_run = 0;
  for (const auto& [name, s] : corpus()) {
    if (!s.has_zero() || s.size() > 12) continue;
    ++fixtures_run;
    for (const auto& i : enumerate_ideals(s)) {
      ++ideals;
      l.require(verify_reduction_iso(s, i).holds, name);
    }
  }
  l.detail << ideals << " proper ideals over " << fixtures_run << " fixtures with zero (|S| <= 12)";
}

void ac4(Line& l) {
  const auto b2 = fixtures::preset("b2");
  const auto contracted = universal_groupoid(b2, true);
  const auto tight = tight_groupoid(b2);
  const auto pair = pair_groupoid(2);
  l.require(contracted.groupoid().num_arrows() == 4, "contracted arrow count");
  l.require(find_isomorphism(contracted.groupoid(), pair).has_value(), "contracted ≅ pair groupoid");
  l.require(find_isomorphism(tight.germs.groupoid, pair).has_value(), "tight ≅ pair groupoid");
  const auto main2 = verify_main2(testing::b2_theta());
  l.require(main2.holds && main2.tight_holds, "G⋉I⊥ isomorphisms");
  const auto reduced = reduction(partial_trans_groupoid(main2.cover_theta.theta).groupoid, main2.perp);
  l.require(identical(reduced.groupoid, main2.product.groupoid), "restriction reproduces the reduction");
  const ConvolutionAlgebra algebra(main2.product.groupoid);
  const auto dim = algebra.dimension();
  const auto center = center_dimension(algebra);
  l.require(dim == 4 && center == 1, "algebra dimension/center");
  l.detail << "contracted " << contracted.groupoid().num_units() << " units/" << contracted.groupoid().num_arrows()
           << " arrows, tight " << tight.germs.groupoid.num_arrows() << " arrows, G⋉I⊥ "
           << main2.product.groupoid.num_arrows() << " arrows, algebra dim " << dim << " center " << center;
}

void ac5(Line& l) {
  std::size_t actions = 0;
  auto run = [&](const std::string& name, const InvSemigroup& s, bool contracted) {
    const auto r = verify_equiv_roundtrip(beta_action(CharSpace::of(s, contracted)));
    ++actions;
    l.require(r.roundtrip && r.isomorphic && r.germ_arrows == r.product_arrows, name);
  };
  for (const auto& [name, s] : corpus()) {
    run(name, s, false);
    if (s.has_zero()) run(name + " contracted", s, true);
  }
  for (const auto& s : random_fixtures(10)) run("random", s, false);
  l.detail << actions << " β actions round-trip with S⋉X ≅ 𝒢(S)⋉X";
}

void ac6(Line& l) {
  const auto s3 = ks_pipeline(sigma_morphism(fixtures::preset("s3")));
  l.require(s3.holds(), "S3 pipeline");
  l.require(s3.target_action.num_points() == 3, "|X| = 3");
  l.require(s3.target_germs.groupoid.num_arrows() == 6, "6 target arrows");
  l.require(s3.source.num_arrows() == 3, "3 source arrows");
  l.require(s3.alpha_report.weak_equivalence, "α weak equivalence");
  l.require(s3.source_center == 3 && s3.target_center == 3, "centers 3 = 3");
  const auto s4 = ks_pipeline(sigma_morphism(fixtures::preset("s4")));
  l.require(s4.holds() && verify_isomorphism(s4.alpha), "S4 α isomorphism");
  const auto cover = eunitary_cover(testing::b2_theta());
  const auto perp = ideal_perp(CharSpace::of(cover.cover, false), cover.ideal);
  const auto b2 = ks_pipeline(sigma_morphism(cover.cover), {perp});
  l.require(b2.holds(), "B2 cover pipeline");
  l.require(find_isomorphism(b2.source, pair_groupoid(2)).has_value(), "B2 cover source ≅ pair groupoid");
  l.detail << "S3: |X|=" << s3.target_action.num_points() << ", arrows " << s3.source.num_arrows() << " -> "
           << s3.target_germs.groupoid.num_arrows() << ", centers " << s3.source_center << "=" << s3.target_center
           << "; S4 α iso; B2 cover on I⊥: source " << b2.source.num_arrows() << " arrows, centers "
           << b2.source_center << "=" << b2.target_center;
}

void ac7(Line& l) {
  std::size_t meets = 0, functors = 0, perps = 0, certs = 0, mismatches = 0;
  std::string witness;
  for (const auto& [name, s] : corpus()) {
    if (is_e_unitary(s)) {
      const auto sigma = max_group_image(s);
      for (Id a = 0; a < s.size(); ++a)
        for (Id b = 0; b < s.size(); ++b)
          if (sigma(a) == sigma(b)) {
            ++meets;
            l.require(meet_sigma(s, sigma, a, b) == oracle::meet(s, a, b), name + " meet");
          }
    }
    std::vector<SemigroupMorphism> morphisms = {sigma_morphism(s), SemigroupMorphism::identity(s)};
    if (s.has_zero() && s.size() <= 12)
      for (const auto& i : enumerate_ideals(s)) {
        const auto q = rees_quotient(s, i);
        morphisms.push_back(SemigroupMorphism::validate(s, q.quotient, q.map));
        const auto space = CharSpace::of(s, true);
        const auto perp = ideal_perp(space, i);
        const std::set<Id> in(perp.begin(), perp.end());
        for (Id a = 0; a < s.size(); ++a)
          for (Id f : perp) {
            const auto image = oracle::beta(s, a, oracle::up_closure(s, {space.min(f)}));
            if (!image) continue;
            bool hit = false;
            for (Id g : perp) hit = hit || oracle::up_closure(s, {space.min(g)}) == *image;
            l.require(hit, name + " I⊥ invariance");
          }
        ++perps;
      }
    for (const auto& phi : morphisms) {
      if (!is_locally_idempotent_pure(phi)) continue;
      ++functors;
      l.require(cocycle_faithfulness_map(induced_functor(phi).functor).injective, name + " faithfulness");
      if (!is_f_morphism(phi)) continue;
      for (const auto& c : check_ks_condition(phi).certificates) {
        std::vector<Id> fibre;
        for (Id a = 0; a < s.size(); ++a)
          if (phi(a) == c.t) fibre.push_back(a);
        if (fibre.empty()) continue;
        Id u = fibre.front();
        for (Id a : fibre)
          if (oracle::leq(s, u, a)) u = a;
        ++certs;
        // The certificate itself must be the maximal elements of eSf ∩ φ⁻¹(t↓).
        std::vector<Id> downset;
        for (Id a = 0; a < s.size(); ++a)
          if (s.mul(c.e, a, c.f) == a && oracle::leq(phi.target(), phi(a), c.t)) downset.push_back(a);
        std::vector<Id> maximal;
        for (Id a : downset)
          if (std::none_of(downset.begin(), downset.end(), [&](Id b) { return b != a && oracle::leq(s, a, b); }))
            maximal.push_back(a);
        l.require(c.cert.generators == maximal, name + " certificate generators");
        if (c.cert.generators == std::vector<Id>{s.mul(c.e, u, c.f)}) continue;
        if (phi.target().idempotents().size() == 1) {
          l.require(false, name + " F-morphism certificate over a group");
        } else if (mismatches++ == 0) {
          witness = name + " (e,f,t)=(" + s.name(c.e) + "," + s.name(c.f) + "," + phi.target().name(c.t) +
                    "): generators {" + s.name(c.cert.generators.front()) + "}, euf = " + s.name(s.mul(c.e, u, c.f));
        }
      }
    }
  }
  l.detail << meets << " σ-matched meets, " << functors << " faithful induced functors, " << perps
           << " invariant I⊥, " << certs - mismatches << "/" << certs << " F-morphism certificates equal {euf}";
  if (l.pass && mismatches > 0) {
    // φ(s) < t does not force s ≤ max φ⁻¹(t) unless T is a group.
    l.pass = false;
    l.documented = true;
    l.detail << " [unattainable: " << mismatches << " certificates of F-morphisms into non-groups differ from {euf}, e.g. "
             << witness << "]";
  }
}

void ac8(Line& l) {
  std::mt19937_64 rng(8);
  std::size_t mutations = 0, groupoids = 0, spaces = 0;
  for (const auto& [name, s] : corpus()) {
    if (s.size() > 1 && s.size() <= 12)
      for (int k = 0; k < 25; ++k, ++mutations) {
        auto t = s.table();
        const Id a = rng() % s.size(), b = rng() % s.size();
        t[a][b] = (t[a][b] + 1 + rng() % (s.size() - 1)) % s.size();
        bool accepted = true;
        try {
          InvSemigroup::validate(s.names(), t);
        } catch (const Error&) {
          accepted = false;
        }
        bool axioms = true;
        for (Id x = 0; x < s.size() && axioms; ++x)
          for (Id y = 0; y < s.size() && axioms; ++y)
            for (Id z = 0; z < s.size() && axioms; ++z) axioms = t[t[x][y]][z] == t[x][t[y][z]];
        for (Id x = 0; x < s.size() && axioms; ++x) {
          std::size_t inverses = 0;
          for (Id y = 0; y < s.size(); ++y) inverses += t[t[x][y]][x] == x && t[t[y][x]][y] == y;
          axioms = inverses == 1;
        }
        l.require(accepted == axioms, name + " mutation verdict");
      }
    std::vector<FiniteGroupoid> built = {universal_groupoid(s, false).groupoid()};
    if (s.has_zero()) {
      built.push_back(universal_groupoid(s, true).groupoid());
      built.push_back(tight_groupoid(s).germs.groupoid);
    }
    if (is_e_unitary(s)) {
      const auto theta = theta_from_sigma(s);
      built.push_back(partial_trans_groupoid(theta.theta).groupoid);
      built.push_back(enveloping_group_action(theta.theta).global_product.groupoid);
    }
    for (const auto& g : built) {
      ++groupoids;
      l.require(oracle::groupoid_axioms(g), name + " groupoid axioms");
    }
    for (bool contracted : {false, true}) {
      if (contracted && !s.has_zero()) continue;
      const auto space = CharSpace::of(s, contracted);
      ++spaces;
      l.require(space.size() == s.idempotents().size() - (contracted ? 1 : 0), name + " filter count");
      if (s.idempotents().size() <= 16)
        l.require(oracle::filters(s, contracted).size() == space.size(), name + " filter enumeration");
      for (Id e : s.idempotents())
        for (Id f : s.idempotents()) {
          const auto de = d_set(space, e), df = d_set(space, f);
          std::vector<Id> both;
          std::set_intersection(de.begin(), de.end(), df.begin(), df.end(), std::back_inserter(both));
          l.require(both == d_set(space, s.mul(e, f)), name + " D(e)∩D(f)");
        }
    }
  }
  l.detail << mutations << " table mutations judged like the axioms, " << groupoids << " groupoids valid, " << spaces
           << " filter spaces with |Ê| = |E| (-1 contracted) and D(e)∩D(f)=D(ef)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Line&)>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  int unexpected = 0;
  for (const auto& [id, fn] : criteria) {
    Line l;
    l.id = id;
    try {
      fn(l);
    } catch (const std::exception& e) {
      l.pass = false;
      l.documented = false;
      l.detail << " [exception: " << e.what() << "]";
    }
    std::cout << id << " " << (l.pass ? "PASS" : "FAIL") << " " << l.detail.str() << "\n";
    if (!l.pass && !l.documented) ++unexpected;
  }
  // Documented-unattainable failures are printed but do not fail the run.
  return unexpected == 0 ? 0 : 1;
}
