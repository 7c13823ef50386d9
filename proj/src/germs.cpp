#include "germoid/germs.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "germoid/error.hpp"

namespace germoid {

namespace {

bool same_gspace(const GroupoidSpaceAction& a, const GroupoidSpaceAction& b) {
  if (a.num_points() != b.num_points() || !identical(a.groupoid(), b.groupoid())) return false;
  const auto& g = a.groupoid();
  for (Id x = 0; x < a.num_points(); ++x) {
    if (a.anchor(x) != b.anchor(x)) return false;
    for (Id h = 0; h < g.num_arrows(); ++h)
      if (a.apply(h, x) != b.apply(h, x)) return false;
  }
  return true;
}

}  // namespace

GermGroupoid germ_groupoid(const SAction& action) {
  const auto& s = action.semigroup();
  const std::size_t points = action.num_points();
  check_size(s.size() * points, "germ set");

  // (least s, x) → members, keyed per point by s·e_x.
  std::map<std::pair<Id, Id>, std::vector<std::pair<Id, Id>>> germs;
  for (Id x = 0; x < points; ++x) {
    const Id e = action.anchor(x);
    std::map<Id, Id> least;  // s·e → least s
    for (Id a = 0; a < s.size(); ++a) {
      if (!action.in_domain(s.source_idempotent(a), x)) continue;
      const Id witness = s.mul(a, e);
      auto [it, fresh] = least.emplace(witness, a);
      germs[{it->second, x}].emplace_back(a, x);
    }
  }

  GermGroupoid out{action, unit_groupoid(0), {}, {}, std::vector<Id>(s.size() * points, kNone)};
  std::vector<ArrowData> arrows;
  for (auto& [rep, members] : germs) {
    const Id id = out.reps.size();
    for (const auto& [a, x] : members) out.lookup[a * points + x] = id;
    out.reps.push_back(rep);
    out.classes.push_back(std::move(members));
    arrows.push_back({"[" + s.name(rep.first) + "," + action.point_name(rep.second) + "]", rep.second,
                      action.apply(rep.first, rep.second)});
  }
  out.groupoid = FiniteGroupoid::build(
      action.points(), std::move(arrows),
      [&](Id i, Id j) {
        const auto [a, x] = out.reps[i];
        const auto [b, y] = out.reps[j];
        return out.arrow(s.mul(a, b), y);
      },
      [&](Id i) {
        const auto [a, x] = out.reps[i];
        return out.arrow(s.star(a), action.apply(a, x));
      });
  return out;
}

UniversalGroupoid universal_groupoid(const InvSemigroup& s, bool contracted) {
  auto space = CharSpace::of(s, contracted);
  auto germs = germ_groupoid(beta_action(space));
  return {std::move(space), std::move(germs)};
}

TightGroupoid tight_groupoid(const InvSemigroup& s) {
  if (!s.has_zero()) throw Error(Errc::NoZero, "the tight groupoid needs a zero");
  auto full = universal_groupoid(s, true);
  auto units = tight_spectrum(full.space);
  auto restricted = restrict_action(full.germs.action, units);
  auto germs = germ_groupoid(restricted.action);
  const auto reduced = reduction(full.groupoid(), units);
  if (!identical(reduced.groupoid, germs.groupoid))
    throw Error(Errc::InternalInvariant, "tight groupoid differs from the reduction to tight filters");
  return {std::move(full.space), std::move(units), std::move(germs)};
}

std::vector<Id> ideal_perp(const CharSpace& space, std::span<const Id> ideal) {
  const auto& s = space.semigroup();
  if (ideal.empty() || !is_ideal(s, ideal)) throw Error(Errc::NotAnIdeal, "subset is not an ideal");
  std::vector<bool> in(s.size(), false);
  for (Id x : ideal) in[x] = true;
  if (std::all_of(in.begin(), in.end(), [](bool b) { return b; }))
    throw Error(Errc::ImproperIdeal, "ideal is the whole semigroup");
  std::vector<Id> perp;
  for (Id f = 0; f < space.size(); ++f)
    if (!in[space.min(f)]) perp.push_back(f);
  try {
    restrict_action(beta_action(space), perp);
  } catch (const Error& err) {
    if (err.code() == Errc::NotInvariant) throw Error(Errc::InternalInvariant, "I⊥ is not β-invariant", err.witness());
    throw;
  }
  return perp;
}

ReductionCheck verify_reduction_iso(const InvSemigroup& s, std::span<const Id> ideal) {
  if (ideal.empty()) throw Error(Errc::NotAnIdeal, "the empty set is not an ideal");
  auto quotient = rees_quotient(s, ideal);
  auto quotient_side = universal_groupoid(quotient.quotient, true);
  auto ambient = universal_groupoid(s, s.has_zero());
  auto perp = ideal_perp(ambient.space, ideal);
  auto reduced = reduction(ambient.groupoid(), perp);

  ReductionCheck check{quotient, quotient_side, ambient, perp, reduced, std::nullopt, std::nullopt, false};
  const auto& g = reduced.groupoid;
  const auto& h = quotient_side.groupoid();
  std::vector<Id> units(g.num_units(), kNone), arrows(g.num_arrows(), kNone);
  for (Id u = 0; u < g.num_units(); ++u) {
    const Id x = ambient.space.min(reduced.unit_origin[u]);
    if (auto f = quotient_side.space.filter_of(quotient.map[x])) units[u] = *f;
    else return check;
  }
  for (Id a = 0; a < g.num_arrows(); ++a) {
    const auto [rep, filter] = ambient.germs.reps[reduced.arrow_origin[a]];
    const Id filter_image = *quotient_side.space.filter_of(quotient.map[ambient.space.min(filter)]);
    arrows[a] = quotient_side.germs.arrow(quotient.map[rep], filter_image);
    if (arrows[a] == kNone) return check;
  }
  try {
    check.iso = GroupoidFunctor::validate(g, h, units, arrows);
  } catch (const Error&) {
    return check;
  }
  if (!verify_isomorphism(*check.iso)) return check;
  std::vector<Id> units_back(h.num_units()), arrows_back(h.num_arrows());
  for (Id u = 0; u < units.size(); ++u) units_back[units[u]] = u;
  for (Id a = 0; a < arrows.size(); ++a) arrows_back[arrows[a]] = a;
  try {
    check.back = GroupoidFunctor::validate(h, g, std::move(units_back), std::move(arrows_back));
  } catch (const Error&) {
    return check;
  }
  check.holds = verify_isomorphism(*check.iso, check.back);
  return check;
}

SAction saction_from_gspace(const UniversalGroupoid& u, const GroupoidSpaceAction& action) {
  if (!identical(action.groupoid(), u.groupoid()))
    throw Error(Errc::WrongGroupoid, "action is not over the given universal groupoid");
  const auto& s = u.space.semigroup();
  const std::size_t points = action.num_points();
  std::vector<PartialMap> maps(s.size(), PartialMap(points));
  for (Id a = 0; a < s.size(); ++a)
    for (Id x = 0; x < points; ++x) {
      const Id germ = u.germs.arrow(a, action.anchor(x));
      if (germ != kNone) maps[a].set(x, action.apply(germ, x));
    }
  return SAction::validate(s, action.points(), std::move(maps));
}

GroupoidSpaceAction gspace_from_saction(const UniversalGroupoid& u, const SAction& action) {
  if (!(u.space.semigroup() == action.semigroup()))
    throw Error(Errc::WrongGroupoid, "universal groupoid of a different semigroup");
  std::vector<Id> anchor;
  for (Id x = 0; x < action.num_points(); ++x) {
    const auto filter = u.space.filter_of(action.anchor(x));
    if (!filter) throw Error(Errc::NotAFilter, "{e : x ∈ X_e} is not a point of the filter space", {x});
    anchor.push_back(*filter);
  }
  const auto& germs = u.germs;
  return GroupoidSpaceAction::validate(u.groupoid(), action.points(), std::move(anchor), [&](Id g, Id x) {
    const Id y = action.apply(germs.reps[g].first, x);
    for (const auto& [a, filter] : germs.classes[g])
      if (action.apply(a, x) != y) throw Error(Errc::InternalInvariant, "germ action is not well defined", {g, x});
    return y;
  });
}

namespace {

bool germ_product_iso(const UniversalGroupoid& u, const GermGroupoid& germs, const GroupoidSpaceAction& gspace,
                      EquivReport& report) {
  const auto product = semidirect_product(gspace);
  report.germ_arrows = germs.groupoid.num_arrows();
  report.product_arrows = product.groupoid.num_arrows();
  std::vector<Id> units(gspace.num_points()), arrows;
  for (Id x = 0; x < units.size(); ++x) units[x] = x;
  for (const auto& [a, x] : germs.reps) {
    const Id g = u.germs.arrow(a, gspace.anchor(x));
    const Id arrow = g == kNone ? kNone : product.arrow(g, x);
    if (arrow == kNone) return false;
    arrows.push_back(arrow);
  }
  try {
    return verify_isomorphism(GroupoidFunctor::validate(germs.groupoid, product.groupoid, units, arrows));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

EquivReport verify_equiv_roundtrip(const SAction& action) {
  EquivReport report;
  const auto u = universal_groupoid(action.semigroup(), false);
  const auto gspace = gspace_from_saction(u, action);
  const auto back = saction_from_gspace(u, gspace);
  report.roundtrip = back.maps() == action.maps() && same_gspace(gspace_from_saction(u, back), gspace);
  report.isomorphic = germ_product_iso(u, germ_groupoid(action), gspace, report);
  return report;
}

EquivReport verify_equiv_roundtrip(const UniversalGroupoid& u, const GroupoidSpaceAction& action) {
  EquivReport report;
  const auto saction = saction_from_gspace(u, action);
  const auto back = gspace_from_saction(u, saction);
  report.roundtrip = same_gspace(back, action) && saction_from_gspace(u, back).maps() == saction.maps();
  report.isomorphic = germ_product_iso(u, germ_groupoid(saction), action, report);
  return report;
}

InducedFunctor induced_functor(const SemigroupMorphism& phi, bool contract_source, bool contract_target) {
  auto source = universal_groupoid(phi.source(), contract_source);
  auto target = universal_groupoid(phi.target(), contract_target);
  const auto hat = hat_map(SemilatticeMap::from(phi), source.space, target.space);
  if (std::find(hat.begin(), hat.end(), kNone) != hat.end())
    throw Error(Errc::InvalidParams, "φ̂ sends a filter outside the target space");
  std::vector<Id> arrows;
  for (const auto& [a, filter] : source.germs.reps) {
    const Id image = target.germs.arrow(phi(a), hat[filter]);
    if (image == kNone) throw Error(Errc::InternalInvariant, "φ(s) is not defined at φ̂(F)", {a, filter});
    arrows.push_back(image);
  }
  auto functor = GroupoidFunctor::validate(source.groupoid(), target.groupoid(), hat, std::move(arrows));
  return {std::move(source), std::move(target), std::move(functor)};
}

}  // namespace germoid
