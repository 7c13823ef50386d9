#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germoid/germs.hpp"
#include "germoid/groupoid.hpp"
#include "germoid/partial_map.hpp"
#include "germoid/semigroup.hpp"
#include "germoid/spectra.hpp"

namespace germoid {

/// A dual prehomomorphism G → I_X with θ(1) the identity.
class PartialGroupAction {
 public:
  /// `maps[g]` is θ(g). Throws Error{IdentityNotTotal | InverseMismatch |
  /// NotDualPrehom | NotBijective | InvalidParams}.
  static PartialGroupAction validate(FiniteGroup g, std::vector<std::string> points, std::vector<PartialMap> maps);

  const FiniteGroup& group() const noexcept { return g_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point_name(Id x) const { return points_.at(x); }
  const PartialMap& map(Id g) const { return maps_.at(g); }
  const std::vector<PartialMap>& maps() const noexcept { return maps_; }
  /// θ(g)x, or kNone.
  Id apply(Id g, Id x) const { return maps_.at(g)(x); }
  bool global() const;

 private:
  PartialGroupAction(FiniteGroup g, std::vector<std::string> points, std::vector<PartialMap> maps)
      : g_(std::move(g)), points_(std::move(points)), maps_(std::move(maps)) {}
  FiniteGroup g_;
  std::vector<std::string> points_;
  std::vector<PartialMap> maps_;
};

struct TransformationGroupoid {
  FiniteGroupoid groupoid;               // G⋉X
  std::vector<std::pair<Id, Id>> pairs;  // arrow → (g, x)
  GroupoidFunctor cocycle;               // G⋉X → G, (g, x) ↦ g

  Id arrow(Id g, Id x) const;
};

/// Arrows (g, x) with x in the domain of θ(g), d = x, r = θ(g)x.
TransformationGroupoid partial_trans_groupoid(const PartialGroupAction& theta);

/// θ(g) = ⋃_{σ(s) = g} β_s on the filter space of an E-unitary semigroup.
struct SigmaPartialAction {
  SigmaMap sigma;
  CharSpace space;  // not contracted; filter ids coincide with the idempotent order
  SAction beta;
  PartialGroupAction theta;
};

/// Throws Error{NotEUnitary}.
SigmaPartialAction theta_from_sigma(const InvSemigroup& s);

struct Main1Check {
  UniversalGroupoid universal;
  SigmaPartialAction theta;
  TransformationGroupoid product;
  std::optional<GroupoidFunctor> phi;  // [s, F] ↦ (σ(s), F)
  std::optional<GroupoidFunctor> psi;  // (g, F) ↦ [least s ∈ σ⁻¹(g) with F ∈ D(s*s), F]
  bool holds = false;
};

/// Throws Error{NotEUnitary}.
Main1Check verify_main1(const InvSemigroup& s);

struct RestrictedPartialAction {
  PartialGroupAction action;
  std::vector<Id> origin;  // new point → old point
};

/// Throws Error{NotInvariant}.
RestrictedPartialAction restrict_partial_action(const PartialGroupAction& theta, std::vector<Id> subset);

struct EnvelopeResult {
  std::vector<std::pair<Id, Id>> representatives;  // point of X̃ → least (g, x)
  PartialGroupAction global;                        // G acting on X̃, everywhere defined
  std::vector<Id> embedding;                        // x ↦ [1, x]
  TransformationGroupoid partial_product;           // G⋉X
  TransformationGroupoid global_product;            // G⋉X̃
  GroupoidFunctor inclusion;                        // G⋉X → G⋉X̃
  FunctorReport inclusion_report;
  bool embedding_injective = false;
  bool restriction_matches = false;                 // global action on the image of X is θ
  bool meets_every_orbit = false;
};

/// X̃ = (G × X)/∼ with (g,x) ∼ (h,y) iff θ(h⁻¹g)x = y.
EnvelopeResult enveloping_group_action(const PartialGroupAction& theta);

struct Main2Check {
  EUnitaryCover cover;
  SigmaPartialAction cover_theta;
  std::vector<Id> perp;                  // I⊥ in the filter space of T
  RestrictedPartialAction restricted;    // G(T) acting on I⊥
  TransformationGroupoid product;
  UniversalGroupoid contracted;          // contracted universal groupoid of S
  std::optional<GroupoidFunctor> iso;    // G⋉I⊥ → 𝒢(S)
  bool holds = false;
  RestrictedPartialAction tight_restricted;
  TransformationGroupoid tight_product;
  TightGroupoid tight;
  std::optional<GroupoidFunctor> tight_iso;
  bool tight_holds = false;
};

/// The contracted and tight groupoids of S as partial transformation
/// groupoids of the cover's group image. Throws Error{NotIdempotentPure}.
Main2Check verify_main2(const PartialGroupHom& theta);

struct KsOptions {
  /// Filters of the (non-contracted) source space to restrict to; must be invariant.
  std::optional<std::vector<Id>> contract_to;
};

struct KsResult {
  KsReport ks;
  InducedFunctor induced;
  FiniteGroupoid source;        // 𝒢(S), or its reduction
  GroupoidFunctor functor;      // source → 𝒢(T)
  FaithfulnessMap faithfulness;
  EnvelopingAction envelope;    // 𝒢(T) acting on X
  SAction target_action;        // T acting on X
  GermGroupoid target_germs;    // T⋉X
  GroupoidFunctor alpha;        // source → T⋉X
  FunctorReport alpha_report;
  bool projection_matches = false;
  bool equiv_holds = false;
  bool closed_identity = false;
  std::size_t source_center = 0;
  std::size_t target_center = 0;

  bool holds() const {
    return alpha_report.weak_equivalence && projection_matches && equiv_holds && closed_identity &&
           source_center == target_center;
  }
};

/// Throws Error{NotLocallyIdempotentPure | FaithfulnessFailed | NotInvariant}.
KsResult ks_pipeline(const SemigroupMorphism& phi, const KsOptions& options = {});

/// ψ(X) ∩ (D(e) × D(f) × (t, D(t*t))) = ψ(X ∩ ⋃ᵢ (sᵢ, D(sᵢ*sᵢ))) for every
/// certificate, with ψ(g) = (r(g), d(g), φ(g)) and X ⊆ arrows of 𝒢(S).
bool closed_identity_holds(const InducedFunctor& induced, const KsReport& ks, std::span<const Id> arrows);

}  // namespace germoid
