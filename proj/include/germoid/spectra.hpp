#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germoid/action.hpp"
#include "germoid/semigroup.hpp"

namespace germoid {

/// The filters of E(S). Finite filters are principal, so a filter is stored as
/// the id of its minimum; filters are numbered in increasing order of that id.
class CharSpace {
 public:
  /// Throws Error{ContractedWithoutZero}.
  static CharSpace of(InvSemigroup s, bool contracted);

  const InvSemigroup& semigroup() const noexcept { return s_; }
  bool contracted() const noexcept { return contracted_; }
  std::size_t size() const noexcept { return mins_.size(); }
  Id min(Id filter) const { return mins_.at(filter); }
  const std::vector<Id>& mins() const noexcept { return mins_; }
  /// The filter x↑, if it is a point of this space.
  std::optional<Id> filter_of(Id x) const;
  std::string name(Id filter) const { return s_.name(min(filter)) + "↑"; }
  std::vector<std::string> names() const;

  /// e ∈ F, i.e. min(F) ≤ e.
  bool contains(Id filter, Id e) const { return s_.mul(min(filter), e) == min(filter); }

  /// Maximal proper filters; empty unless contracted.
  const std::vector<Id>& tight() const noexcept { return tight_; }

 private:
  CharSpace(InvSemigroup s, bool contracted, std::vector<Id> mins, std::vector<Id> tight)
      : s_(std::move(s)), contracted_(contracted), mins_(std::move(mins)), tight_(std::move(tight)) {}
  InvSemigroup s_;
  bool contracted_;
  std::vector<Id> mins_;
  std::vector<Id> tight_;
};

inline CharSpace enumerate_filters(const InvSemigroup& s, bool contracted) {
  return CharSpace::of(s, contracted);
}

/// D(e) as increasing filter ids. Throws Error{UnknownElement} unless e is idempotent.
std::vector<Id> d_set(const CharSpace& space, Id e);

/// Throws Error{ContractedWithoutZero}.
std::vector<Id> tight_spectrum(const CharSpace& space);

struct DownsetCertificate {
  std::vector<Id> generators;  // pairwise incomparable
  std::vector<Id> downset;     // increasing
};

/// Maximal elements of a downset of S in the natural order.
/// Throws Error{NotADownset | UnknownElement}.
DownsetCertificate downset_generators(const InvSemigroup& s, std::span<const Id> downset);

/// A meet-preserving map E(S) → E(T), indexed by the ids of S (entries off
/// E(S) are kNone).
class SemilatticeMap {
 public:
  /// Throws Error{NotMeetPreserving | UnknownElement | InvalidParams}.
  static SemilatticeMap validate(InvSemigroup source, InvSemigroup target, std::vector<Id> map);
  static SemilatticeMap from(const SemigroupMorphism& phi);

  const InvSemigroup& source() const noexcept { return source_; }
  const InvSemigroup& target() const noexcept { return target_; }
  Id operator()(Id e) const { return map_.at(e); }

 private:
  SemilatticeMap(InvSemigroup s, InvSemigroup t, std::vector<Id> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
  InvSemigroup source_;
  InvSemigroup target_;
  std::vector<Id> map_;
};

struct LocalCertificate {
  Id e;
  Id t;
  DownsetCertificate cert;  // generators of e↓ ∩ φ⁻¹(t↓)
};

struct CoherenceReport {
  bool coherent = true;
  bool locally_coherent = true;
  std::vector<Id> targets;                    // E(T), increasing
  std::vector<DownsetCertificate> preimages;  // φ⁻¹(t↓) per target
  std::vector<LocalCertificate> local;
};

/// Finite downsets are always finitely generated, so both flags hold; the
/// content is in the certificates.
CoherenceReport is_coherent(const SemilatticeMap& phi);

/// x↑ ↦ φ(x)↑ between the two spaces. An entry is kNone where φ(x)↑ is not a
/// point of `target` (φ(x) = 0 in a contracted target).
std::vector<Id> hat_map(const SemilatticeMap& phi, const CharSpace& source, const CharSpace& target);

struct KsCertificate {
  Id e;
  Id f;
  Id t;
  DownsetCertificate cert;  // generators of eSf ∩ φ⁻¹(t↓)
};

struct KsReport {
  bool holds = true;
  std::vector<KsCertificate> certificates;

  const KsCertificate* find(Id e, Id f, Id t) const;
};

KsReport check_ks_condition(const SemigroupMorphism& phi);

/// β_s(x↑) = (s x s*)↑ on D(s*s).
SAction beta_action(const CharSpace& space);

}  // namespace germoid
