#include "germoid/partact.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "germoid/error.hpp"
#include "germoid/matrixrep.hpp"

namespace germoid {

namespace {

// Least member of each class is its root.
class Classes {
 public:
  explicit Classes(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Id{0}); }
  Id find(Id x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Id> parent_;
};

Id position_in(const std::vector<Id>& sorted, Id x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return it != sorted.end() && *it == x ? static_cast<Id>(it - sorted.begin()) : kNone;
}

std::optional<GroupoidFunctor> try_functor(const FiniteGroupoid& g, const FiniteGroupoid& h, std::vector<Id> units,
                                           std::vector<Id> arrows) {
  if (std::find(units.begin(), units.end(), kNone) != units.end()) return std::nullopt;
  if (std::find(arrows.begin(), arrows.end(), kNone) != arrows.end()) return std::nullopt;
  try {
    return GroupoidFunctor::validate(g, h, std::move(units), std::move(arrows));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Least t over g whose source idempotent lies in the filter.
Id least_lift(const SigmaPartialAction& theta, Id g, Id filter) {
  const auto& s = theta.space.semigroup();
  for (Id t : theta.sigma.fiber(g))
    if (theta.space.contains(filter, s.source_idempotent(t))) return t;
  return kNone;
}

}  // namespace

PartialGroupAction PartialGroupAction::validate(FiniteGroup g, std::vector<std::string> points,
                                                std::vector<PartialMap> maps) {
  const std::size_t n = points.size();
  if (maps.size() != g.size()) throw Error(Errc::InvalidParams, "one partial map per group element expected");
  for (Id a = 0; a < maps.size(); ++a) {
    if (maps[a].size() != n) throw Error(Errc::InvalidParams, "partial map has the wrong arity", {a});
    for (Id x = 0; x < n; ++x)
      if (maps[a].defined(x) && maps[a](x) >= n) throw Error(Errc::InvalidParams, "image out of range", {a, x});
    if (!maps[a].injective()) throw Error(Errc::NotBijective, "θ(g) is not injective", {a});
  }
  if (maps[g.identity()] != PartialMap::identity(n))
    throw Error(Errc::IdentityNotTotal, "θ(1) is not the identity", {g.identity()});
  for (Id a = 0; a < maps.size(); ++a)
    if (maps[g.inverse(a)] != maps[a].inverse()) throw Error(Errc::InverseMismatch, "θ(g⁻¹) != θ(g)⁻¹", {a});
  for (Id a = 0; a < maps.size(); ++a)
    for (Id b = 0; b < maps.size(); ++b)
      if (!compose(maps[a], maps[b]).restricts(maps[g.mul(a, b)]))
        throw Error(Errc::NotDualPrehom, "θ(g)θ(h) is not below θ(gh)", {a, b});
  return PartialGroupAction(std::move(g), std::move(points), std::move(maps));
}

bool PartialGroupAction::global() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const PartialMap& m) { return m.total(); });
}

Id TransformationGroupoid::arrow(Id g, Id x) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(g, x));
  if (it == pairs.end() || *it != std::make_pair(g, x)) return kNone;
  return static_cast<Id>(it - pairs.begin());
}

TransformationGroupoid partial_trans_groupoid(const PartialGroupAction& theta) {
  const auto& group = theta.group();
  std::vector<std::pair<Id, Id>> pairs;
  std::vector<ArrowData> arrows;
  for (Id g = 0; g < group.size(); ++g)
    for (Id x = 0; x < theta.num_points(); ++x)
      if (const Id y = theta.apply(g, x); y != kNone) {
        pairs.emplace_back(g, x);
        arrows.push_back({"(" + group.name(g) + "," + theta.point_name(x) + ")", x, y});
      }
  check_size(pairs.size(), "partial transformation groupoid");
  auto index = [&](Id g, Id x) {
    return static_cast<Id>(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(g, x)) - pairs.begin());
  };
  auto groupoid = FiniteGroupoid::build(
      theta.points(), std::move(arrows),
      [&](Id a, Id b) { return index(group.mul(pairs[a].first, pairs[b].first), pairs[b].second); },
      [&](Id a) {
        const auto [g, x] = pairs[a];
        return index(group.inverse(g), theta.apply(g, x));
      });
  std::vector<Id> arrow_map;
  for (const auto& p : pairs) arrow_map.push_back(p.first);
  auto cocycle = GroupoidFunctor::validate(groupoid, group_as_groupoid(group),
                                           std::vector<Id>(theta.num_points(), 0), std::move(arrow_map));
  return {std::move(groupoid), std::move(pairs), std::move(cocycle)};
}

SigmaPartialAction theta_from_sigma(const InvSemigroup& s) {
  auto sigma = max_group_image(s);
  if (!is_e_unitary(s, sigma)) throw Error(Errc::NotEUnitary, "θ needs an E-unitary semigroup");
  auto space = CharSpace::of(s, false);
  auto beta = beta_action(space);
  std::vector<PartialMap> maps;
  for (Id g = 0; g < sigma.group.size(); ++g) {
    PartialMap m(space.size());
    for (Id a : sigma.fiber(g)) {
      auto [merged, agree] = merge(m, beta.map(a));
      if (!agree) throw Error(Errc::InternalInvariant, "β maps over one group element disagree", {g, a});
      m = std::move(merged);
    }
    maps.push_back(std::move(m));
  }
  auto theta = PartialGroupAction::validate(sigma.group, space.names(), std::move(maps));
  return {std::move(sigma), std::move(space), std::move(beta), std::move(theta)};
}

Main1Check verify_main1(const InvSemigroup& s) {
  auto theta = theta_from_sigma(s);
  auto universal = universal_groupoid(s, false);
  auto product = partial_trans_groupoid(theta.theta);
  Main1Check check{std::move(universal), std::move(theta), std::move(product), std::nullopt, std::nullopt, false};
  const auto& u = check.universal;
  const auto& th = check.theta;
  const auto& p = check.product;

  std::vector<Id> units(th.space.size());
  std::iota(units.begin(), units.end(), Id{0});
  std::vector<Id> phi_arrows, psi_arrows;
  for (const auto& [a, filter] : u.germs.reps) phi_arrows.push_back(p.arrow(th.sigma(a), filter));
  for (const auto& [g, filter] : p.pairs) {
    const Id t = least_lift(th, g, filter);
    psi_arrows.push_back(t == kNone ? kNone : u.germs.arrow(t, filter));
  }
  check.phi = try_functor(u.groupoid(), p.groupoid, units, std::move(phi_arrows));
  check.psi = try_functor(p.groupoid, u.groupoid(), units, std::move(psi_arrows));
  check.holds = check.phi && check.psi && verify_isomorphism(*check.phi, check.psi);
  return check;
}

RestrictedPartialAction restrict_partial_action(const PartialGroupAction& theta, std::vector<Id> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Id x : subset)
    if (x >= theta.num_points()) throw Error(Errc::InvalidParams, "point out of range", {x});
  const auto& group = theta.group();
  std::vector<PartialMap> maps(group.size(), PartialMap(subset.size()));
  for (Id g = 0; g < group.size(); ++g)
    for (Id i = 0; i < subset.size(); ++i) {
      const Id y = theta.apply(g, subset[i]);
      if (y == kNone) continue;
      const Id j = position_in(subset, y);
      if (j == kNone) throw Error(Errc::NotInvariant, "subset is not invariant", {g, subset[i]});
      maps[g].set(i, j);
    }
  std::vector<std::string> names;
  for (Id x : subset) names.push_back(theta.point_name(x));
  return {PartialGroupAction::validate(group, std::move(names), std::move(maps)), std::move(subset)};
}

EnvelopeResult enveloping_group_action(const PartialGroupAction& theta) {
  const auto& group = theta.group();
  const std::size_t n = theta.num_points();
  check_size(group.size() * n, "enveloping space");
  // (g, x) sits at g·n + x, so class roots are lexicographically least.
  Classes classes(group.size() * n);
  for (Id g = 0; g < group.size(); ++g)
    for (Id k = 0; k < group.size(); ++k)
      for (Id x = 0; x < n; ++x)
        if (const Id y = theta.apply(k, x); y != kNone)
          classes.unite(g * n + x, group.mul(g, group.inverse(k)) * n + y);

  std::vector<Id> point_of(group.size() * n, kNone);
  std::vector<std::pair<Id, Id>> reps;
  for (Id i = 0; i < point_of.size(); ++i)
    if (classes.find(i) == i) {
      point_of[i] = reps.size();
      reps.emplace_back(i / n, i % n);
    }
  for (Id i = 0; i < point_of.size(); ++i) point_of[i] = point_of[classes.find(i)];

  std::vector<std::string> names;
  for (const auto& [g, x] : reps) names.push_back("[" + group.name(g) + "," + theta.point_name(x) + "]");
  std::vector<PartialMap> maps(group.size(), PartialMap(reps.size()));
  for (Id k = 0; k < group.size(); ++k)
    for (Id p = 0; p < reps.size(); ++p) maps[k].set(p, point_of[group.mul(k, reps[p].first) * n + reps[p].second]);
  auto global = PartialGroupAction::validate(group, std::move(names), std::move(maps));

  std::vector<Id> embedding;
  for (Id x = 0; x < n; ++x) embedding.push_back(point_of[group.identity() * n + x]);

  auto partial_product = partial_trans_groupoid(theta);
  auto global_product = partial_trans_groupoid(global);
  std::vector<Id> arrows;
  for (const auto& [g, x] : partial_product.pairs) arrows.push_back(global_product.arrow(g, embedding[x]));
  auto inclusion = GroupoidFunctor::validate(partial_product.groupoid, global_product.groupoid, embedding, arrows);
  auto report = functor_report(inclusion);

  const std::set<Id> image(embedding.begin(), embedding.end());
  const bool injective = image.size() == embedding.size();
  bool matches = true;
  for (Id g = 0; g < group.size(); ++g)
    for (Id x = 0; x < n; ++x) {
      const Id y = theta.apply(g, x);
      const Id moved = global.apply(g, embedding[x]);
      if (y != kNone ? moved != embedding[y] : image.count(moved) != 0) matches = false;
    }
  bool meets = true;
  for (Id p = 0; p < reps.size(); ++p) {
    bool hit = false;
    for (Id g = 0; g < group.size() && !hit; ++g) hit = image.count(global.apply(g, p)) != 0;
    meets = meets && hit;
  }
  return {std::move(reps), std::move(global), std::move(embedding), std::move(partial_product),
          std::move(global_product), std::move(inclusion), report, injective, matches, meets};
}

Main2Check verify_main2(const PartialGroupHom& theta) {
  const auto& s = theta.source();
  auto cover = eunitary_cover(theta);
  auto cover_theta = theta_from_sigma(cover.cover);
  const auto& space = cover_theta.space;
  auto perp = ideal_perp(space, cover.ideal);
  auto restricted = restrict_partial_action(cover_theta.theta, perp);
  auto product = partial_trans_groupoid(restricted.action);
  auto contracted = universal_groupoid(s, true);
  auto tight = tight_groupoid(s);

  // Restricted point u ↦ the S-filter of to_source(min), and (g, u) ↦ [lift, ·].
  auto build_iso = [&](const RestrictedPartialAction& r, const TransformationGroupoid& p, const GermGroupoid& germs,
                       const std::function<Id(Id)>& target_unit) {
    std::vector<Id> units, arrows;
    for (Id origin : r.origin) {
      const auto filter = contracted.space.filter_of(cover.to_source[space.min(origin)]);
      units.push_back(filter ? target_unit(*filter) : kNone);
    }
    for (const auto& [g, u] : p.pairs) {
      const Id t = least_lift(cover_theta, g, r.origin[u]);
      arrows.push_back(t == kNone || units[u] == kNone ? kNone : germs.arrow(cover.to_source[t], units[u]));
    }
    return try_functor(p.groupoid, germs.groupoid, std::move(units), std::move(arrows));
  };

  auto iso = build_iso(restricted, product, contracted.germs, [](Id f) { return f; });
  const bool holds = iso && verify_isomorphism(*iso);

  std::vector<Id> tight_points;
  for (Id f : perp)
    if (const auto filter = contracted.space.filter_of(cover.to_source[space.min(f)]);
        filter && position_in(tight.units, *filter) != kNone)
      tight_points.push_back(f);
  auto tight_restricted = restrict_partial_action(cover_theta.theta, tight_points);
  auto tight_product = partial_trans_groupoid(tight_restricted.action);
  auto tight_iso = build_iso(tight_restricted, tight_product, tight.germs,
                             [&](Id f) { return position_in(tight.units, f); });
  const bool tight_holds = tight_iso && verify_isomorphism(*tight_iso);

  return {std::move(cover),      std::move(cover_theta),      std::move(perp),          std::move(restricted),
          std::move(product),    std::move(contracted),       std::move(iso),           holds,
          std::move(tight_restricted), std::move(tight_product), std::move(tight),     std::move(tight_iso),
          tight_holds};
}

bool closed_identity_holds(const InducedFunctor& induced, const KsReport& ks, std::span<const Id> arrows) {
  const auto& src = induced.source;
  const auto& tgt = induced.target;
  const auto& g = src.groupoid();
  const auto& f = induced.functor;
  const auto& s = src.space.semigroup();
  const auto& t_semigroup = tgt.space.semigroup();
  for (const auto& cert : ks.certificates) {
    for (Id a : arrows) {
      const Id d = g.dom(a);
      const Id r = g.ran(a);
      const Id bisection = tgt.germs.arrow(cert.t, f.unit(d));
      const bool lhs = src.space.contains(r, cert.e) && src.space.contains(d, cert.f) && bisection != kNone &&
                       tgt.space.contains(f.unit(d), t_semigroup.source_idempotent(cert.t)) &&
                       f.arrow(a) == bisection;
      bool rhs = false;
      for (Id gen : cert.cert.generators)
        rhs = rhs || (src.space.contains(d, s.source_idempotent(gen)) && src.germs.arrow(gen, d) == a);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

KsResult ks_pipeline(const SemigroupMorphism& phi, const KsOptions& options) {
  if (!is_locally_idempotent_pure(phi))
    throw Error(Errc::NotLocallyIdempotentPure, "φ is not locally idempotent pure");
  auto ks = check_ks_condition(phi);
  auto induced = induced_functor(phi);

  std::vector<Id> source_arrows(induced.source.groupoid().num_arrows());
  std::iota(source_arrows.begin(), source_arrows.end(), Id{0});
  std::optional<ReducedGroupoid> reduced;
  if (options.contract_to) {
    restrict_action(induced.source.germs.action, *options.contract_to);  // NotInvariant
    reduced = reduction(induced.source.groupoid(), *options.contract_to);
    source_arrows = reduced->arrow_origin;
  }
  FiniteGroupoid source = reduced ? reduced->groupoid : induced.source.groupoid();
  GroupoidFunctor functor = reduced ? compose(induced.functor, reduced->inclusion) : induced.functor;

  auto faithfulness = cocycle_faithfulness_map(functor);
  if (!faithfulness.injective) throw Error(Errc::FaithfulnessFailed, "(r, d, F) is not injective");
  auto envelope = enveloping_action_of_functor(functor);
  auto target_action = saction_from_gspace(induced.target, envelope.action);
  auto target_germs = germ_groupoid(target_action);

  // 𝒢(T)⋉X → T⋉X, ([t, F], x) ↦ [t, x].
  std::vector<Id> units(envelope.action.num_points()), arrows;
  std::iota(units.begin(), units.end(), Id{0});
  for (const auto& [h, x] : envelope.product.pairs)
    arrows.push_back(target_germs.arrow(induced.target.germs.reps[h].first, x));
  auto iso = try_functor(envelope.product.groupoid, target_germs.groupoid, units, std::move(arrows));
  if (!iso || !verify_isomorphism(*iso))
    throw Error(Errc::InternalInvariant, "germ groupoid differs from the semidirect product");
  auto alpha = compose(*iso, envelope.alpha);
  auto alpha_report = functor_report(alpha);

  const auto equiv = verify_equiv_roundtrip(induced.target, envelope.action);
  bool closed = closed_identity_holds(induced, ks, source_arrows);
  for (Id a : source_arrows) closed = closed && closed_identity_holds(induced, ks, std::span<const Id>(&a, 1));

  const std::size_t source_center = center_dimension(ConvolutionAlgebra(source));
  const std::size_t target_center = center_dimension(ConvolutionAlgebra(target_germs.groupoid));
  const bool projection = envelope.projection_matches;
  return {std::move(ks),
          std::move(induced),
          std::move(source),
          std::move(functor),
          std::move(faithfulness),
          std::move(envelope),
          std::move(target_action),
          std::move(target_germs),
          std::move(alpha),
          alpha_report,
          projection,
          equiv.roundtrip && equiv.isomorphic,
          closed,
          source_center,
          target_center};
}

}  // namespace germoid
