#include "germoid/action.hpp"

#include <algorithm>

#include "germoid/error.hpp"

namespace germoid {

SAction SAction::validate(InvSemigroup s, std::vector<std::string> points, std::vector<PartialMap> maps) {
  const std::size_t n = points.size();
  check_size(n, "action space");
  if (maps.size() != s.size()) throw Error(Errc::InvalidParams, "need one partial map per semigroup element");
  for (Id a = 0; a < s.size(); ++a) {
    if (maps[a].size() != n) throw Error(Errc::InvalidParams, "partial map has wrong size", {a});
    for (Id x : maps[a].domain())
      if (maps[a](x) >= n) throw Error(Errc::InvalidParams, "partial map leaves the space", {a, x});
    if (!maps[a].injective()) throw Error(Errc::NotBijective, "θ_s is not injective", {a});
  }
  for (Id a = 0; a < s.size(); ++a)
    for (Id b = 0; b < s.size(); ++b)
      if (compose(maps[a], maps[b]) != maps[s.mul(a, b)])
        throw Error(Errc::NotAHomomorphism, "θ_s∘θ_t != θ_st", {a, b});

  std::vector<Id> anchor(n, kNone);
  for (Id x = 0; x < n; ++x) {
    Id meet = kNone;
    for (Id e : s.idempotents())
      if (maps[e].defined(x)) meet = meet == kNone ? e : s.mul(meet, e);
    if (meet == kNone) throw Error(Errc::DomainsDontCover, "point lies in no domain", {x});
    // X_e ∩ X_f = X_ef for a homomorphism, so the meet is itself a witness.
    if (!maps[meet].defined(x)) throw Error(Errc::InternalInvariant, "point domains are not meet-closed", {x});
    anchor[x] = meet;
  }
  return SAction(std::move(s), std::move(points), std::move(maps), std::move(anchor));
}

RestrictedAction restrict_action(const SAction& action, std::vector<Id> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<Id> renumber(action.num_points(), kNone);
  for (Id i = 0; i < subset.size(); ++i) {
    if (subset[i] >= action.num_points()) throw Error(Errc::InvalidParams, "point out of range", {subset[i]});
    renumber[subset[i]] = i;
  }
  const auto& s = action.semigroup();
  std::vector<PartialMap> maps(s.size(), PartialMap(subset.size()));
  for (Id a = 0; a < s.size(); ++a)
    for (Id i = 0; i < subset.size(); ++i) {
      const Id y = action.apply(a, subset[i]);
      if (y == kNone) continue;
      if (renumber[y] == kNone) throw Error(Errc::NotInvariant, "subset is not invariant", {a, subset[i]});
      maps[a].set(i, renumber[y]);
    }
  std::vector<std::string> names;
  for (Id x : subset) names.push_back(action.point_name(x));
  return {SAction::validate(s, std::move(names), std::move(maps)), std::move(subset)};
}

}  // namespace germoid
