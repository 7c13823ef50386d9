#pragma once

#include <string>
#include <vector>

#include "germoid/partial_map.hpp"
#include "germoid/semigroup.hpp"

namespace germoid {

/// An action of an inverse semigroup on a finite set by partial bijections,
/// i.e. a homomorphism S → I_X whose domains cover X.
class SAction {
 public:
  /// `maps[s]` is θ_s. Throws Error{NotBijective | NotAHomomorphism |
  /// DomainsDontCover | InvalidParams}.
  static SAction validate(InvSemigroup s, std::vector<std::string> points, std::vector<PartialMap> maps);

  const InvSemigroup& semigroup() const noexcept { return s_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point_name(Id x) const { return points_.at(x); }
  const PartialMap& map(Id s) const { return maps_.at(s); }
  const std::vector<PartialMap>& maps() const noexcept { return maps_; }

  /// θ_s(x), or kNone.
  Id apply(Id s, Id x) const { return maps_.at(s)(x); }
  /// x ∈ X_e for an idempotent e.
  bool in_domain(Id e, Id x) const { return maps_.at(e).defined(x); }

  /// The least idempotent e with x ∈ X_e. The set of such e is a filter.
  Id anchor(Id x) const { return anchor_.at(x); }

 private:
  SAction(InvSemigroup s, std::vector<std::string> points, std::vector<PartialMap> maps, std::vector<Id> anchor)
      : s_(std::move(s)), points_(std::move(points)), maps_(std::move(maps)), anchor_(std::move(anchor)) {}
  InvSemigroup s_;
  std::vector<std::string> points_;
  std::vector<PartialMap> maps_;
  std::vector<Id> anchor_;
};

struct RestrictedAction {
  SAction action;
  std::vector<Id> origin;  // new point → old point
};

/// Restriction to an invariant subset, points renumbered in increasing order.
/// Throws Error{NotInvariant}.
RestrictedAction restrict_action(const SAction& action, std::vector<Id> subset);

}  // namespace germoid
