#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "germoid/action.hpp"
#include "germoid/groupoid.hpp"
#include "germoid/spectra.hpp"

namespace germoid {

/// The groupoid of germs S⋉X of an action. Arrow ids follow the least
/// representative (s, x) of each germ in lexicographic order.
struct GermGroupoid {
  SAction action;
  FiniteGroupoid groupoid;
  std::vector<std::pair<Id, Id>> reps;                  // arrow → least (s, x)
  std::vector<std::vector<std::pair<Id, Id>>> classes;  // arrow → every (s, x) in the germ
  std::vector<Id> lookup;                               // s * |X| + x → arrow, or kNone

  /// The germ [s, x], or kNone when x ∉ X_{s*s}.
  Id arrow(Id s, Id x) const { return lookup.at(s * action.num_points() + x); }
};

/// [s,x] = [t,x] iff s·e = t·e for the least idempotent e with x ∈ X_e.
GermGroupoid germ_groupoid(const SAction& action);

/// The groupoid of germs of β on the filter space.
struct UniversalGroupoid {
  CharSpace space;
  GermGroupoid germs;

  const FiniteGroupoid& groupoid() const noexcept { return germs.groupoid; }
};

/// Throws Error{ContractedWithoutZero}.
UniversalGroupoid universal_groupoid(const InvSemigroup& s, bool contracted);

struct TightGroupoid {
  CharSpace space;          // contracted
  std::vector<Id> units;    // tight filters of `space`
  GermGroupoid germs;       // β restricted to the tight filters
};

/// Also checks that the result is the reduction of the contracted universal
/// groupoid to the tight filters. Throws Error{NoZero}.
TightGroupoid tight_groupoid(const InvSemigroup& s);

/// {x↑ : x ∉ I} among the points of `space`; checked to be β-invariant.
/// Throws Error{NotAnIdeal | ImproperIdeal}.
std::vector<Id> ideal_perp(const CharSpace& space, std::span<const Id> ideal);

struct ReductionCheck {
  ReesQuotient quotient;
  UniversalGroupoid quotient_side;  // contracted groupoid of S/I
  UniversalGroupoid ambient;        // contracted if S has a zero
  std::vector<Id> perp;
  ReducedGroupoid reduced;          // ambient groupoid restricted to I⊥
  std::optional<GroupoidFunctor> iso;   // [s, x↑] ↦ [q(s), q(x)↑]
  std::optional<GroupoidFunctor> back;
  bool holds = false;
};

/// Throws Error{NotAnIdeal | ImproperIdeal}.
ReductionCheck verify_reduction_iso(const InvSemigroup& s, std::span<const Id> ideal);

/// ρ_s(x) = [s, p(x)]·x. Throws Error{WrongGroupoid}.
SAction saction_from_gspace(const UniversalGroupoid& u, const GroupoidSpaceAction& action);

/// p(x) = the filter {e : x ∈ X_e}; [s, p(x)]·x = θ_s(x). `u` must be the
/// non-contracted universal groupoid of the acting semigroup.
/// Throws Error{WrongGroupoid | NotAFilter}.
GroupoidSpaceAction gspace_from_saction(const UniversalGroupoid& u, const SAction& action);

struct EquivReport {
  bool roundtrip = false;    // both composites are identities
  bool isomorphic = false;   // S⋉X ≅ 𝒢(S)⋉X via [s,x] ↦ ([s,p(x)], x)
  std::size_t germ_arrows = 0;
  std::size_t product_arrows = 0;
};

EquivReport verify_equiv_roundtrip(const SAction& action);
EquivReport verify_equiv_roundtrip(const UniversalGroupoid& u, const GroupoidSpaceAction& action);

struct InducedFunctor {
  UniversalGroupoid source;
  UniversalGroupoid target;
  GroupoidFunctor functor;  // [s, F] ↦ [φ(s), φ̂(F)]
};

/// Throws Error{InvalidParams} if φ̂ leaves a contracted target space.
InducedFunctor induced_functor(const SemigroupMorphism& phi, bool contract_source = false,
                               bool contract_target = false);

}  // namespace germoid
