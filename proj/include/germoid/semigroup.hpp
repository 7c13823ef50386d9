#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "germoid/types.hpp"

namespace germoid {

/// A finite inverse semigroup given by a validated multiplication table.
///
/// Elements are the ids 0..n-1; `mul(a, b)` is the table entry for a·b. The
/// value is immutable and shares its storage, so copies are cheap.
class InvSemigroup {
 public:
  /// Validates associativity, unique inverses and (if given) that `zero` is
  /// absorbing. Throws Error{NotAssociative | NoUniqueInverse |
  /// ZeroNotAbsorbing | InvalidParams | SizeLimitExceeded}.
  static InvSemigroup validate(std::vector<std::string> names,
                               const std::vector<std::vector<Id>>& table,
                               std::optional<Id> zero = std::nullopt);

  std::size_t size() const noexcept { return data_->n; }
  Id mul(Id a, Id b) const { return data_->table[a * data_->n + b]; }
  Id mul(Id a, Id b, Id c) const { return mul(mul(a, b), c); }
  Id star(Id s) const { return data_->star[s]; }
  bool is_idempotent(Id s) const { return data_->idempotent[s]; }
  /// Idempotent ids in increasing order.
  const std::vector<Id>& idempotents() const noexcept { return data_->idempotents; }
  std::optional<Id> zero() const noexcept { return data_->zero; }
  bool has_zero() const noexcept { return data_->zero.has_value(); }
  bool is_zero(Id s) const { return data_->zero && *data_->zero == s; }

  const std::string& name(Id s) const { return data_->names.at(s); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::optional<Id> find(std::string_view name) const;
  std::vector<std::vector<Id>> table() const;

  /// s*s and ss*.
  Id source_idempotent(Id s) const { return mul(star(s), s); }
  Id range_idempotent(Id s) const { return mul(s, star(s)); }

  bool operator==(const InvSemigroup& other) const;

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<Id> table;
    std::optional<Id> zero;
    std::vector<Id> star;
    std::vector<bool> idempotent;
    std::vector<Id> idempotents;
  };
  explicit InvSemigroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// An inverse semigroup with exactly one idempotent.
class FiniteGroup {
 public:
  /// Throws Error{InvalidParams} unless S has exactly one idempotent.
  static FiniteGroup from(InvSemigroup s);
  static FiniteGroup trivial();

  std::size_t size() const noexcept { return s_.size(); }
  Id identity() const noexcept { return s_.idempotents().front(); }
  Id mul(Id a, Id b) const { return s_.mul(a, b); }
  Id inverse(Id g) const { return s_.star(g); }
  const std::string& name(Id g) const { return s_.name(g); }
  const InvSemigroup& semigroup() const noexcept { return s_; }

  bool operator==(const FiniteGroup&) const = default;

 private:
  explicit FiniteGroup(InvSemigroup s) : s_(std::move(s)) {}
  InvSemigroup s_;
};

/// s ≤ t in the natural partial order, tested as s = t·s*·s.
bool natural_leq(const InvSemigroup& s, Id a, Id b);

/// Maximal group image σ: S → G(S).
struct SigmaMap {
  FiniteGroup group;
  std::vector<Id> classmap;

  Id operator()(Id s) const { return classmap.at(s); }
  /// σ⁻¹(g), increasing.
  std::vector<Id> fiber(Id g) const;
};

/// Groups classes by the value s·z where z is the minimum idempotent; classes
/// are numbered by their least element.
SigmaMap max_group_image(const InvSemigroup& s);

bool is_e_unitary(const InvSemigroup& s);
bool is_e_unitary(const InvSemigroup& s, const SigmaMap& sigma);

/// s ≥ e ≠ 0 with e idempotent implies s idempotent. Throws Error{NoZero}.
bool is_zero_e_unitary(const InvSemigroup& s);

/// The meet t·s*·s of two σ-equivalent elements of an E-unitary semigroup.
/// Throws Error{NotEUnitary | SigmaMismatch}.
Id meet_sigma(const InvSemigroup& s, Id a, Id b);
Id meet_sigma(const InvSemigroup& s, const SigmaMap& sigma, Id a, Id b);

bool is_ideal(const InvSemigroup& s, std::span<const Id> subset);
/// Every non-empty proper ideal, each sorted, in lexicographic order.
std::vector<std::vector<Id>> enumerate_ideals(const InvSemigroup& s);

struct ReesQuotient {
  InvSemigroup quotient;
  std::vector<Id> map;  // S → S/I
};

/// Collapses the ideal to the zero of the quotient. Quotient ids follow the
/// least original id of each class. Throws Error{NotAnIdeal | ImproperIdeal}.
ReesQuotient rees_quotient(const InvSemigroup& s, std::span<const Id> ideal);

/// A homomorphism of finite inverse semigroups.
class SemigroupMorphism {
 public:
  /// Throws Error{NotAHomomorphism | InvalidParams}.
  static SemigroupMorphism validate(InvSemigroup source, InvSemigroup target, std::vector<Id> map);
  static SemigroupMorphism identity(const InvSemigroup& s);

  const InvSemigroup& source() const noexcept { return source_; }
  const InvSemigroup& target() const noexcept { return target_; }
  Id operator()(Id s) const { return map_.at(s); }
  const std::vector<Id>& map() const noexcept { return map_; }

 private:
  SemigroupMorphism(InvSemigroup src, InvSemigroup tgt, std::vector<Id> map)
      : source_(std::move(src)), target_(std::move(tgt)), map_(std::move(map)) {}
  InvSemigroup source_;
  InvSemigroup target_;
  std::vector<Id> map_;
};

/// ψ∘φ. Throws Error{InvalidParams} if φ's target is not ψ's source.
SemigroupMorphism compose(const SemigroupMorphism& psi, const SemigroupMorphism& phi);

/// σ as a morphism onto G(S).
SemigroupMorphism sigma_morphism(const InvSemigroup& s);

/// Every non-empty fibre has a maximum in the natural order.
bool is_f_morphism(const SemigroupMorphism& phi);
/// φ restricted to each local monoid eSe is idempotent pure.
bool is_locally_idempotent_pure(const SemigroupMorphism& phi);
/// φ(s) idempotent implies s idempotent.
bool is_idempotent_pure(const SemigroupMorphism& phi);

/// A map S∖{0} → G with φ(st) = φ(s)φ(t) whenever st ≠ 0.
class PartialGroupHom {
 public:
  /// `map` is indexed by element id; the entry at the zero is ignored.
  /// Throws Error{NoZero | NotAPartialHom | InvalidParams}.
  static PartialGroupHom validate(InvSemigroup source, FiniteGroup target, std::vector<Id> map);

  const InvSemigroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  Id operator()(Id s) const { return map_.at(s); }

 private:
  PartialGroupHom(InvSemigroup src, FiniteGroup tgt, std::vector<Id> map)
      : source_(std::move(src)), target_(std::move(tgt)), map_(std::move(map)) {}
  InvSemigroup source_;
  FiniteGroup target_;
  std::vector<Id> map_;
};

/// θ⁻¹(1) is exactly the set of non-zero idempotents.
bool is_idempotent_pure(const PartialGroupHom& theta);

/// E-unitary cover T = ⟨(s, θ(s))⟩ ⊆ S × G with kernel ideal I = (0 × G) ∩ T.
struct EUnitaryCover {
  InvSemigroup cover;
  std::vector<Id> ideal;      // ids of T lying over 0
  std::vector<Id> to_source;  // first projection T → S
  std::vector<Id> to_group;   // second projection T → G
  ReesQuotient quotient;      // T → T/I
  std::vector<Id> iso;        // T/I → S, a verified isomorphism
};

/// Throws Error{NotIdempotentPure}.
EUnitaryCover eunitary_cover(const PartialGroupHom& theta);

}  // namespace germoid
