#include "germoid/verify.hpp"

#include <chrono>
#include <functional>

#include "germoid/error.hpp"
#include "germoid/germs.hpp"
#include "germoid/matrixrep.hpp"
#include "germoid/partact.hpp"

namespace germoid {

namespace {

using Check = std::function<void(const InvSemigroup&, VerifyReport&)>;

void skip(VerifyReport& r, std::string reason) {
  r.skipped = true;
  r.pass = true;
  r.reason = std::move(reason);
}

void main1(const InvSemigroup& s, VerifyReport& r) {
  if (!is_e_unitary(s)) return skip(r, "not E-unitary");
  const auto check = verify_main1(s);
  r.sizes = {{"universal_arrows", check.universal.groupoid().num_arrows()},
             {"product_arrows", check.product.groupoid.num_arrows()}};
  r.pass = check.holds;
  if (check.holds) {
    const auto map = algebra_map_from_functor(*check.phi);
    r.pass = map.homomorphism && map.preserves_involution;
    if (!r.pass) r.reason = "Φ does not induce an algebra isomorphism";
  } else {
    r.reason = !check.phi ? "Φ is not a functor" : !check.psi ? "Ψ is not a functor" : "Φ and Ψ are not inverse";
  }
}

void main1reduced(const InvSemigroup& s, VerifyReport& r) {
  if (!is_e_unitary(s)) return skip(r, "not E-unitary");
  const auto report = verify_intertwining(s);
  r.sizes = {{"elements", s.size()}, {"idempotents", s.idempotents().size()}};
  r.pass = report.holds();
  r.witness = report.failing;
  if (!r.pass)
    r.reason = !report.isometry ? "U is not an isometry"
               : !report.intertwines ? "UΛ != AU"
               : !report.conditions_agree ? "equivalent conditions disagree"
               : !report.routes_agree ? "evaluated form disagrees on the image of U"
                                      : "not a *-representation";
}

void reduction_suite(const InvSemigroup& s, VerifyReport& r) {
  if (!s.has_zero()) return skip(r, "no zero");
  const auto ideals = enumerate_ideals(s);
  if (ideals.empty()) return skip(r, "no proper ideal");
  r.pass = true;
  for (Id i = 0; i < ideals.size() && r.pass; ++i) {
    const auto check = verify_reduction_iso(s, ideals[i]);
    if (!check.holds) {
      r.pass = false;
      r.witness = ideals[i];
      r.reason = "reduction to I⊥ is not isomorphic to the quotient groupoid";
    }
  }
  r.sizes = {{"ideals", ideals.size()}};
}

void equiv(const InvSemigroup& s, VerifyReport& r) {
  const auto beta = beta_action(CharSpace::of(s, false));
  const auto report = verify_equiv_roundtrip(beta);
  r.sizes = {{"germ_arrows", report.germ_arrows}, {"product_arrows", report.product_arrows}};
  r.pass = report.roundtrip && report.isomorphic;
  if (!r.pass) r.reason = report.roundtrip ? "S⋉X and 𝒢(S)⋉X differ" : "round trip is not the identity";
}

void envelope(const InvSemigroup& s, VerifyReport& r) {
  if (!is_e_unitary(s)) return skip(r, "not E-unitary");
  const auto theta = theta_from_sigma(s);
  const auto env = enveloping_group_action(theta.theta);
  r.sizes = {{"points", theta.theta.num_points()}, {"global_points", env.global.num_points()}};
  r.pass = env.embedding_injective && env.restriction_matches && env.meets_every_orbit &&
           env.inclusion_report.weak_equivalence && env.global.global();
  if (!r.pass) r.reason = "enveloping action invariant failed";
}

void ks(const InvSemigroup& s, VerifyReport& r) {
  const auto sigma = sigma_morphism(s);
  if (!is_locally_idempotent_pure(sigma)) return skip(r, "σ is not locally idempotent pure");
  const auto result = ks_pipeline(sigma);
  r.sizes = io::to_json(result)["sizes"];
  r.sizes["centers"] = {result.source_center, result.target_center};
  r.pass = result.holds();
  if (!r.pass) r.reason = "pipeline condition failed";
}

const std::vector<std::pair<std::string, Check>>& suites() {
  static const std::vector<std::pair<std::string, Check>> all = {
      {"main1", main1}, {"main1reduced", main1reduced}, {"reduction", reduction_suite},
      {"equiv", equiv}, {"envelope", envelope},         {"ks", ks}};
  return all;
}

}  // namespace

io::json VerifyReport::to_json(bool timing) const {
  io::json j = {{"check", check}, {"fixture", fixture}, {"pass", pass}};
  if (skipped) j["skipped"] = true;
  if (!reason.empty()) j["reason"] = reason;
  j["sizes"] = sizes;
  j["witness"] = witness;
  if (timing) j["wall_ms"] = wall_ms;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<VerifyReport> run_suite(std::string_view suite, const std::string& fixture, const InvSemigroup& s) {
  std::vector<VerifyReport> out;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    VerifyReport r;
    r.check = name;
    r.fixture = fixture;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(s, r);
    } catch (const Error& e) {
      r.pass = false;
      r.reason = e.what();
      r.witness = e.witness();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  if (out.empty()) throw Error(Errc::InvalidParams, "unknown suite \"" + std::string(suite) + "\"");
  return out;
}

}  // namespace germoid
