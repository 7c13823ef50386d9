#include "germoid/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "germoid/error.hpp"

namespace germoid {

namespace {

std::uint64_t key(Id a, Id b, std::size_t n) { return static_cast<std::uint64_t>(a) * n + b; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Id{0}); }
  Id find(Id x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root survives, so every class is rooted at its least member.
  void unite(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<Id> parent_;
};

void require_unique(const std::vector<std::string>& names, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(Errc::InvalidParams, "duplicate " + std::string(what) + " name '" + n + "'");
}


}  // namespace

bool identical(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.num_units() != b.num_units() || a.num_arrows() != b.num_arrows()) return false;
  for (Id x = 0; x < a.num_arrows(); ++x)
    if (a.dom(x) != b.dom(x) || a.ran(x) != b.ran(x) || a.arrow_name(x) != b.arrow_name(x)) return false;
  for (Id u = 0; u < a.num_units(); ++u)
    if (a.unit_name(u) != b.unit_name(u)) return false;
  return true;
}

FiniteGroupoid FiniteGroupoid::validate(GroupoidData data) {
  auto impl = std::make_shared<Impl>();
  const std::size_t units = data.units.size();
  const std::size_t n = data.arrows.size();
  check_size(n, "groupoid");
  require_unique(data.units, "unit");
  {
    std::vector<std::string> names;
    for (const auto& a : data.arrows) names.push_back(a.name);
    require_unique(names, "arrow");
  }
  impl->homs.assign(units * units, {});
  for (Id a = 0; a < n; ++a) {
    const auto& arrow = data.arrows[a];
    if (arrow.dom >= units || arrow.ran >= units) throw Error(Errc::UnknownUnit, "arrow endpoint is not a unit", {a});
    impl->homs[arrow.dom * units + arrow.ran].push_back(a);
  }

  for (const auto& [a, b, c] : data.comp) {
    if (a >= n || b >= n || c >= n) throw Error(Errc::InvalidParams, "composition refers to unknown arrow");
    if (data.arrows[a].dom != data.arrows[b].ran)
      throw Error(Errc::DomainMismatch, "composite of non-composable arrows", {a, b});
    if (data.arrows[c].dom != data.arrows[b].dom || data.arrows[c].ran != data.arrows[a].ran)
      throw Error(Errc::DomainMismatch, "composite has wrong endpoints", {a, b, c});
    auto [it, fresh] = impl->comp.emplace(key(a, b, n), c);
    if (!fresh && it->second != c) throw Error(Errc::InvalidParams, "composition listed twice", {a, b});
  }

  std::vector<std::vector<Id>> into(units), out_of(units);
  for (Id a = 0; a < n; ++a) {
    into[data.arrows[a].ran].push_back(a);
    out_of[data.arrows[a].dom].push_back(a);
  }
  auto comp = [&](Id a, Id b) {
    auto it = impl->comp.find(key(a, b, n));
    if (it == impl->comp.end()) throw Error(Errc::DomainMismatch, "composite is missing", {a, b});
    return it->second;
  };
  for (Id y = 0; y < units; ++y)
    for (Id a : out_of[y])
      for (Id b : into[y]) comp(a, b);

  impl->identity.assign(units, kNone);
  for (Id x = 0; x < units; ++x) {
    for (Id i : impl->homs[x * units + x]) {
      bool unit = std::all_of(into[x].begin(), into[x].end(), [&](Id b) { return comp(i, b) == b; }) &&
                  std::all_of(out_of[x].begin(), out_of[x].end(), [&](Id a) { return comp(a, i) == a; });
      if (unit) {
        impl->identity[x] = i;
        break;
      }
    }
    if (impl->identity[x] == kNone) throw Error(Errc::MissingIdentity, "unit has no identity arrow", {x});
  }

  impl->inverse.assign(n, kNone);
  for (const auto& [a, b] : data.inv) {
    if (a >= n || b >= n) throw Error(Errc::InvalidParams, "inverse refers to unknown arrow");
    impl->inverse[a] = b;
  }
  for (Id a = 0; a < n; ++a) {
    const Id b = impl->inverse[a];
    const auto& arrow = data.arrows[a];
    if (b == kNone || data.arrows[b].dom != arrow.ran || data.arrows[b].ran != arrow.dom ||
        comp(a, b) != impl->identity[arrow.ran] || comp(b, a) != impl->identity[arrow.dom])
      throw Error(Errc::MissingInverse, "arrow has no inverse", {a});
  }

  for (Id a = 0; a < n; ++a)
    for (Id b : into[data.arrows[a].dom])
      for (Id c : into[data.arrows[b].dom])
        if (comp(comp(a, b), c) != comp(a, comp(b, c)))
          throw Error(Errc::CompositionNotAssociative, "(ab)c != a(bc)", {a, b, c});

  impl->data = std::move(data);
  return FiniteGroupoid(std::move(impl));
}

FiniteGroupoid FiniteGroupoid::build(std::vector<std::string> units, std::vector<ArrowData> arrows,
                                     const std::function<Id(Id, Id)>& compose,
                                     const std::function<Id(Id)>& inverse) {
  GroupoidData data;
  std::vector<std::vector<Id>> into(units.size());
  for (Id a = 0; a < arrows.size(); ++a) {
    if (arrows[a].ran >= units.size() || arrows[a].dom >= units.size())
      throw Error(Errc::UnknownUnit, "arrow endpoint is not a unit", {a});
    into[arrows[a].ran].push_back(a);
  }
  for (Id a = 0; a < arrows.size(); ++a) {
    for (Id b : into[arrows[a].dom]) data.comp.push_back({a, b, compose(a, b)});
    data.inv.emplace_back(a, inverse(a));
  }
  data.units = std::move(units);
  data.arrows = std::move(arrows);
  return validate(std::move(data));
}

Id FiniteGroupoid::compose(Id a, Id b) const {
  auto it = d_->comp.find(key(a, b, num_arrows()));
  return it == d_->comp.end() ? kNone : it->second;
}

const std::vector<Id>& FiniteGroupoid::hom(Id from, Id to) const {
  return d_->homs.at(from * num_units() + to);
}

std::vector<std::vector<Id>> FiniteGroupoid::orbits() const {
  UnionFind uf(num_units());
  for (Id a = 0; a < num_arrows(); ++a) uf.unite(dom(a), ran(a));
  std::map<Id, std::vector<Id>> classes;
  for (Id u = 0; u < num_units(); ++u) classes[uf.find(u)].push_back(u);
  std::vector<std::vector<Id>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGroupoid::shape() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& orbit : orbits()) out.emplace_back(orbit.size(), hom(orbit.front(), orbit.front()).size());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Id> FiniteGroupoid::find_unit(std::string_view name) const {
  const auto& u = d_->data.units;
  auto it = std::find(u.begin(), u.end(), name);
  if (it == u.end()) return std::nullopt;
  return static_cast<Id>(it - u.begin());
}

std::optional<Id> FiniteGroupoid::find_arrow(std::string_view name) const {
  const auto& a = d_->data.arrows;
  auto it = std::find_if(a.begin(), a.end(), [&](const ArrowData& x) { return x.name == name; });
  if (it == a.end()) return std::nullopt;
  return static_cast<Id>(it - a.begin());
}

FiniteGroupoid group_as_groupoid(const FiniteGroup& g) {
  std::vector<ArrowData> arrows;
  for (Id x = 0; x < g.size(); ++x) arrows.push_back({g.name(x), 0, 0});
  return FiniteGroupoid::build({"*"}, std::move(arrows), [&](Id a, Id b) { return g.mul(a, b); },
                               [&](Id a) { return g.inverse(a); });
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  std::vector<std::string> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(std::to_string(i + 1));
  std::vector<ArrowData> arrows;
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) arrows.push_back({"(" + units[i] + "," + units[j] + ")", j, i});
  return FiniteGroupoid::build(
      std::move(units), std::move(arrows), [n](Id a, Id b) { return (a / n) * n + b % n; },
      [n](Id a) { return (a % n) * n + a / n; });
}

FiniteGroupoid unit_groupoid(std::size_t n) {
  std::vector<std::string> units;
  std::vector<ArrowData> arrows;
  for (Id i = 0; i < n; ++i) {
    units.push_back(std::to_string(i + 1));
    arrows.push_back({"id" + std::to_string(i + 1), i, i});
  }
  return FiniteGroupoid::build(std::move(units), std::move(arrows), [](Id a, Id) { return a; },
                               [](Id a) { return a; });
}

GroupoidFunctor GroupoidFunctor::validate(FiniteGroupoid source, FiniteGroupoid target, std::vector<Id> unit_map,
                                          std::vector<Id> arrow_map) {
  if (unit_map.size() != source.num_units() || arrow_map.size() != source.num_arrows())
    throw Error(Errc::InvalidParams, "functor maps have wrong size");
  for (Id u = 0; u < unit_map.size(); ++u)
    if (unit_map[u] >= target.num_units()) throw Error(Errc::NotAFunctor, "unit image out of range", {u});
  for (Id a = 0; a < arrow_map.size(); ++a) {
    const Id fa = arrow_map[a];
    if (fa >= target.num_arrows()) throw Error(Errc::NotAFunctor, "arrow image out of range", {a});
    if (target.dom(fa) != unit_map[source.dom(a)] || target.ran(fa) != unit_map[source.ran(a)])
      throw Error(Errc::NotAFunctor, "endpoints not preserved", {a});
  }
  for (Id u = 0; u < unit_map.size(); ++u)
    if (arrow_map[source.identity(u)] != target.identity(unit_map[u]))
      throw Error(Errc::NotAFunctor, "identity not preserved", {u});
  for (const auto& [a, b, c] : source.data().comp)
    if (arrow_map[c] != target.compose(arrow_map[a], arrow_map[b]))
      throw Error(Errc::NotAFunctor, "composition not preserved", {a, b});
  return GroupoidFunctor(std::move(source), std::move(target), std::move(unit_map), std::move(arrow_map));
}

GroupoidFunctor GroupoidFunctor::identity(const FiniteGroupoid& g) {
  std::vector<Id> units(g.num_units()), arrows(g.num_arrows());
  std::iota(units.begin(), units.end(), Id{0});
  std::iota(arrows.begin(), arrows.end(), Id{0});
  return GroupoidFunctor(g, g, std::move(units), std::move(arrows));
}

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  if (!identical(f.target(), g.source())) throw Error(Errc::InvalidParams, "functors are not composable");
  std::vector<Id> units, arrows;
  for (Id u : f.unit_map()) units.push_back(g.unit(u));
  for (Id a : f.arrow_map()) arrows.push_back(g.arrow(a));
  return GroupoidFunctor::validate(f.source(), g.target(), std::move(units), std::move(arrows));
}

FunctorReport functor_report(const GroupoidFunctor& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  FunctorReport r;
  r.faithful = cocycle_faithfulness_map(f).injective;
  r.full = true;
  for (Id x = 0; x < src.num_units() && r.full; ++x)
    for (Id y = 0; y < src.num_units() && r.full; ++y) {
      std::set<Id> images;
      for (Id g : src.hom(y, x)) images.insert(f.arrow(g));
      r.full = images.size() == tgt.hom(f.unit(y), f.unit(x)).size();
    }
  std::vector<bool> hit(tgt.num_units(), false);
  for (Id u = 0; u < src.num_units(); ++u)
    for (Id v = 0; v < tgt.num_units(); ++v)
      if (!tgt.hom(f.unit(u), v).empty()) hit[v] = true;
  r.essentially_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.fully_faithful = r.faithful && r.full;
  r.weak_equivalence = r.fully_faithful && r.essentially_surjective;
  return r;
}

FaithfulnessMap cocycle_faithfulness_map(const GroupoidFunctor& f) {
  const auto& src = f.source();
  FaithfulnessMap m;
  for (Id g = 0; g < src.num_arrows(); ++g) m.images.push_back({src.ran(g), src.dom(g), f.arrow(g)});
  std::set<std::array<Id, 3>> distinct(m.images.begin(), m.images.end());
  m.injective = distinct.size() == m.images.size();
  return m;
}

bool verify_isomorphism(const GroupoidFunctor& f, const std::optional<GroupoidFunctor>& back) {
  auto bijective = [](const std::vector<Id>& map, std::size_t n) {
    if (map.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (Id x : map) {
      if (x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!bijective(f.unit_map(), f.target().num_units()) || !bijective(f.arrow_map(), f.target().num_arrows()))
    return false;
  if (!back) return true;
  if (!identical(back->source(), f.target()) || !identical(back->target(), f.source())) return false;
  for (Id u = 0; u < f.source().num_units(); ++u)
    if (back->unit(f.unit(u)) != u) return false;
  for (Id a = 0; a < f.source().num_arrows(); ++a)
    if (back->arrow(f.arrow(a)) != a) return false;
  for (Id u = 0; u < f.target().num_units(); ++u)
    if (f.unit(back->unit(u)) != u) return false;
  for (Id a = 0; a < f.target().num_arrows(); ++a)
    if (f.arrow(back->arrow(a)) != a) return false;
  return true;
}

std::optional<GroupoidFunctor> find_isomorphism(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  constexpr std::size_t kSearchLimit = 64;
  if (g.num_arrows() > kSearchLimit || h.num_arrows() > kSearchLimit)
    throw Error(Errc::SizeLimitExceeded, "isomorphism search is limited to 64 arrows");
  if (g.num_units() != h.num_units() || g.num_arrows() != h.num_arrows() || g.shape() != h.shape())
    return std::nullopt;

  const std::size_t n = g.num_arrows();
  std::vector<Id> units(g.num_units(), kNone), units_back(h.num_units(), kNone);
  std::vector<Id> arrows(n, kNone);
  std::vector<bool> used(n, false);

  // Identities first so that unit assignments are fixed early.
  std::vector<Id> order;
  for (Id u = 0; u < g.num_units(); ++u) order.push_back(g.identity(u));
  for (Id a = 0; a < n; ++a)
    if (!g.is_identity(a)) order.push_back(a);

  // Units of one orbit must land in one orbit of the same shape; within
  // matching connected components every unit bijection extends.
  auto orbit_index = [](const FiniteGroupoid& x) {
    std::vector<Id> idx(x.num_units());
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    const auto orbits = x.orbits();
    for (Id o = 0; o < orbits.size(); ++o) {
      for (Id u : orbits[o]) idx[u] = o;
      shapes.emplace_back(orbits[o].size(), x.hom(orbits[o].front(), orbits[o].front()).size());
    }
    return std::make_pair(idx, shapes);
  };
  const auto [orbit_g, shape_g] = orbit_index(g);
  const auto [orbit_h, shape_h] = orbit_index(h);
  std::vector<Id> orbit_map(shape_g.size(), kNone), orbit_back(shape_h.size(), kNone);

  auto consistent = [&](Id a, Id b) {
    for (Id x = 0; x < n; ++x) {
      if (arrows[x] == kNone) continue;
      if (Id c = g.compose(a, x); c != kNone && arrows[c] != kNone && arrows[c] != h.compose(b, arrows[x]))
        return false;
      if (Id c = g.compose(x, a); c != kNone && arrows[c] != kNone && arrows[c] != h.compose(arrows[x], b))
        return false;
      if (g.ran(x) == g.ran(a)) {
        const Id y = g.compose(g.inverse(x), a);
        if (arrows[y] != kNone && h.compose(arrows[x], arrows[y]) != b) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const Id a = order[k];
    const Id du = g.dom(a), ru = g.ran(a);
    for (Id b = 0; b < n; ++b) {
      if (used[b]) continue;
      if (g.is_identity(a) != h.is_identity(b)) continue;
      const Id dv = h.dom(b), rv = h.ran(b);
      const bool new_d = units[du] == kNone, new_r = units[ru] == kNone;
      if (!new_d && units[du] != dv) continue;
      if (!new_r && units[ru] != rv) continue;
      if (new_d && units_back[dv] != kNone) continue;
      if (new_r && du != ru && units_back[rv] != kNone) continue;
      if (new_d && new_r && du == ru && dv != rv) continue;
      if (new_d && new_r && du != ru && dv == rv) continue;
      bool new_orbit = false;
      if (new_d) {
        const Id og = orbit_g[du], oh = orbit_h[dv];
        if (orbit_map[og] == kNone) {
          if (orbit_back[oh] != kNone || shape_g[og] != shape_h[oh]) continue;
          new_orbit = true;
        } else if (orbit_map[og] != oh) {
          continue;
        }
      }
      if (!consistent(a, b)) continue;
      if (new_orbit) orbit_map[orbit_g[du]] = orbit_h[dv], orbit_back[orbit_h[dv]] = orbit_g[du];
      if (new_d) units[du] = dv, units_back[dv] = du;
      if (new_r && du != ru) units[ru] = rv, units_back[rv] = ru;
      arrows[a] = b;
      used[b] = true;
      if (self(self, k + 1)) return true;
      arrows[a] = kNone;
      used[b] = false;
      if (new_d) units[du] = kNone, units_back[dv] = kNone;
      if (new_r && du != ru) units[ru] = kNone, units_back[rv] = kNone;
      if (new_orbit) orbit_map[orbit_g[du]] = kNone, orbit_back[orbit_h[dv]] = kNone;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return GroupoidFunctor::validate(g, h, units, arrows);
}

GroupoidSpaceAction GroupoidSpaceAction::validate(FiniteGroupoid g, std::vector<std::string> points,
                                                  std::vector<Id> anchor, const std::function<Id(Id, Id)>& act) {
  const std::size_t p = points.size();
  check_size(p, "groupoid space");
  if (anchor.size() != p) throw Error(Errc::InvalidParams, "anchor must cover every point");
  for (Id x = 0; x < p; ++x)
    if (anchor[x] >= g.num_units()) throw Error(Errc::UnknownUnit, "anchor is not a unit", {x});
  std::vector<std::vector<Id>> out_of(g.num_units());
  for (Id h = 0; h < g.num_arrows(); ++h) out_of[g.dom(h)].push_back(h);

  std::unordered_map<std::uint64_t, Id> table;
  for (Id x = 0; x < p; ++x)
    for (Id h : out_of[anchor[x]]) {
      const Id y = act(h, x);
      if (y >= p || anchor[y] != g.ran(h)) throw Error(Errc::InvalidAction, "p(hx) != r(h)", {h, x});
      table.emplace(key(h, x, p), y);
    }
  for (Id x = 0; x < p; ++x) {
    if (table.at(key(g.identity(anchor[x]), x, p)) != x)
      throw Error(Errc::InvalidAction, "p(x)x != x", {x});
    for (Id h : out_of[anchor[x]]) {
      const Id hx = table.at(key(h, x, p));
      for (Id k : out_of[g.ran(h)])
        if (table.at(key(k, hx, p)) != table.at(key(g.compose(k, h), x, p)))
          throw Error(Errc::InvalidAction, "k(hx) != (kh)x", {k, h, x});
    }
  }
  return GroupoidSpaceAction(std::move(g), std::move(points), std::move(anchor), std::move(table));
}

Id GroupoidSpaceAction::apply(Id h, Id x) const {
  auto it = act_.find(key(h, x, points_.size()));
  return it == act_.end() ? kNone : it->second;
}

Id SemidirectProduct::arrow(Id h, Id x) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(h, x));
  if (it == pairs.end() || *it != std::make_pair(h, x)) return kNone;
  return static_cast<Id>(it - pairs.begin());
}

SemidirectProduct semidirect_product(const GroupoidSpaceAction& action) {
  const auto& h = action.groupoid();
  std::vector<std::pair<Id, Id>> pairs;
  std::vector<ArrowData> arrows;
  for (Id a = 0; a < h.num_arrows(); ++a)
    for (Id x = 0; x < action.num_points(); ++x)
      if (action.anchor(x) == h.dom(a)) {
        pairs.emplace_back(a, x);
        arrows.push_back({"(" + h.arrow_name(a) + "," + action.point_name(x) + ")", x, action.apply(a, x)});
      }
  check_size(pairs.size(), "semidirect product");
  auto lookup = [&](Id a, Id x) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, x));
    return static_cast<Id>(it - pairs.begin());
  };
  auto groupoid = FiniteGroupoid::build(
      action.points(), std::move(arrows),
      [&](Id i, Id j) { return lookup(h.compose(pairs[i].first, pairs[j].first), pairs[j].second); },
      [&](Id i) {
        const auto [a, x] = pairs[i];
        return lookup(h.inverse(a), action.apply(a, x));
      });
  std::vector<Id> unit_map, arrow_map;
  for (Id x = 0; x < action.num_points(); ++x) unit_map.push_back(action.anchor(x));
  for (const auto& pr : pairs) arrow_map.push_back(pr.first);
  auto projection = GroupoidFunctor::validate(groupoid, h, std::move(unit_map), std::move(arrow_map));
  return {std::move(groupoid), std::move(pairs), std::move(projection)};
}

ReducedGroupoid reduction(const FiniteGroupoid& g, std::vector<Id> units) {
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  std::vector<Id> renumber(g.num_units(), kNone);
  for (Id i = 0; i < units.size(); ++i) {
    if (units[i] >= g.num_units()) throw Error(Errc::UnknownUnit, "unit out of range", {units[i]});
    renumber[units[i]] = i;
  }
  std::vector<Id> arrow_origin, arrow_renumber(g.num_arrows(), kNone);
  std::vector<ArrowData> arrows;
  for (Id a = 0; a < g.num_arrows(); ++a)
    if (renumber[g.dom(a)] != kNone && renumber[g.ran(a)] != kNone) {
      arrow_renumber[a] = arrow_origin.size();
      arrow_origin.push_back(a);
      arrows.push_back({g.arrow_name(a), renumber[g.dom(a)], renumber[g.ran(a)]});
    }
  std::vector<std::string> names;
  for (Id u : units) names.push_back(g.unit_name(u));
  auto reduced = FiniteGroupoid::build(
      std::move(names), std::move(arrows),
      [&](Id a, Id b) { return arrow_renumber[g.compose(arrow_origin[a], arrow_origin[b])]; },
      [&](Id a) { return arrow_renumber[g.inverse(arrow_origin[a])]; });
  auto inclusion = GroupoidFunctor::validate(reduced, g, units, arrow_origin);
  return {std::move(reduced), std::move(units), std::move(arrow_origin), std::move(inclusion)};
}

EnvelopingAction enveloping_action_of_functor(const GroupoidFunctor& f) {
  if (!cocycle_faithfulness_map(f).injective) throw Error(Errc::NotFaithful, "functor is not faithful");
  const auto& g = f.source();
  const auto& h = f.target();

  // Y = {(k, e) : d(k) = F(e)} in lexicographic order.
  std::vector<std::pair<Id, Id>> y;
  for (Id k = 0; k < h.num_arrows(); ++k)
    for (Id e = 0; e < g.num_units(); ++e)
      if (h.dom(k) == f.unit(e)) y.emplace_back(k, e);
  check_size(y.size(), "enveloping space");
  auto index = [&](Id k, Id e) {
    return static_cast<Id>(std::lower_bound(y.begin(), y.end(), std::make_pair(k, e)) - y.begin());
  };

  UnionFind uf(y.size());
  for (Id i = 0; i < y.size(); ++i) {
    const auto [k, e] = y[i];
    for (Id a = 0; a < g.num_arrows(); ++a)
      if (g.dom(a) == e) uf.unite(i, index(h.compose(k, h.inverse(f.arrow(a))), g.ran(a)));
  }
  std::vector<Id> point_of(y.size(), kNone);
  std::vector<std::pair<Id, Id>> reps;
  for (Id i = 0; i < y.size(); ++i)
    if (uf.find(i) == i) {
      point_of[i] = reps.size();
      reps.push_back(y[i]);
    }
  for (Id i = 0; i < y.size(); ++i) point_of[i] = point_of[uf.find(i)];

  std::vector<std::string> names;
  std::vector<Id> anchor;
  for (const auto& [k, e] : reps) {
    names.push_back("[" + h.arrow_name(k) + "," + g.unit_name(e) + "]");
    anchor.push_back(h.ran(k));
  }
  auto action = GroupoidSpaceAction::validate(h, std::move(names), std::move(anchor), [&](Id k, Id x) {
    const auto [rep, e] = reps[x];
    return point_of[index(h.compose(k, rep), e)];
  });
  auto product = semidirect_product(action);

  std::vector<Id> unit_map, arrow_map;
  for (Id e = 0; e < g.num_units(); ++e) unit_map.push_back(point_of[index(h.identity(f.unit(e)), e)]);
  for (Id a = 0; a < g.num_arrows(); ++a) arrow_map.push_back(product.arrow(f.arrow(a), unit_map[g.dom(a)]));
  auto alpha = GroupoidFunctor::validate(g, product.groupoid, std::move(unit_map), std::move(arrow_map));

  bool matches = true;
  for (Id a = 0; a < g.num_arrows(); ++a) matches = matches && product.projection.arrow(alpha.arrow(a)) == f.arrow(a);
  for (Id e = 0; e < g.num_units(); ++e) matches = matches && product.projection.unit(alpha.unit(e)) == f.unit(e);
  auto report = functor_report(alpha);
  return {std::move(reps), std::move(action), std::move(product), std::move(alpha), report, matches};
}

}  // namespace germoid
