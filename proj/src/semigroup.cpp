#include "germoid/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "germoid/error.hpp"

namespace germoid {

namespace {

std::string id_list(std::initializer_list<Id> ids) {
  std::string out = "(";
  bool first = true;
  for (Id i : ids) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + ")";
}

}  // namespace

InvSemigroup InvSemigroup::validate(std::vector<std::string> names,
                                    const std::vector<std::vector<Id>>& table,
                                    std::optional<Id> zero) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::InvalidParams, "semigroup must have at least one element");
  check_size(n, "semigroup");
  if (names.size() != n)
    throw Error(Errc::InvalidParams, "expected " + std::to_string(n) + " element names");
  {
    std::set<std::string_view> seen;
    for (const auto& nm : names)
      if (!seen.insert(nm).second) throw Error(Errc::InvalidParams, "duplicate element name '" + nm + "'");
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->names = std::move(names);
  d->table.resize(n * n);
  for (Id i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(Errc::InvalidParams, "table row " + std::to_string(i) + " has wrong length", {i});
    for (Id j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw Error(Errc::InvalidParams, "table entry out of range at " + id_list({i, j}), {i, j});
      d->table[i * n + j] = table[i][j];
    }
  }
  const auto& t = d->table;
  auto mul = [&](Id a, Id b) { return t[a * n + b]; };

  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) {
      const Id ij = mul(i, j);
      for (Id k = 0; k < n; ++k)
        if (mul(ij, k) != mul(i, mul(j, k)))
          throw Error(Errc::NotAssociative, "(ab)c != a(bc) at " + id_list({i, j, k}), {i, j, k});
    }

  d->star.assign(n, kNone);
  for (Id s = 0; s < n; ++s) {
    std::size_t count = 0;
    for (Id c = 0; c < n; ++c) {
      if (mul(mul(s, c), s) == s && mul(mul(c, s), c) == c) {
        ++count;
        d->star[s] = c;
      }
    }
    if (count != 1)
      throw Error(Errc::NoUniqueInverse,
                  "element " + std::to_string(s) + " has " + std::to_string(count) + " inverses", {s});
  }

  if (zero) {
    if (*zero >= n) throw Error(Errc::InvalidParams, "zero id out of range");
    for (Id s = 0; s < n; ++s)
      if (mul(*zero, s) != *zero || mul(s, *zero) != *zero)
        throw Error(Errc::ZeroNotAbsorbing, "zero does not absorb element " + std::to_string(s), {s});
  }
  d->zero = zero;

  d->idempotent.assign(n, false);
  for (Id s = 0; s < n; ++s) {
    if (mul(s, s) == s) {
      d->idempotent[s] = true;
      d->idempotents.push_back(s);
    }
  }
  return InvSemigroup(std::move(d));
}

std::optional<Id> InvSemigroup::find(std::string_view name) const {
  const auto& names = data_->names;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Id>(it - names.begin());
}

std::vector<std::vector<Id>> InvSemigroup::table() const {
  const std::size_t n = size();
  std::vector<std::vector<Id>> out(n, std::vector<Id>(n));
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) out[i][j] = mul(i, j);
  return out;
}

bool InvSemigroup::operator==(const InvSemigroup& other) const {
  if (data_ == other.data_) return true;
  return data_->names == other.data_->names && data_->table == other.data_->table &&
         data_->zero == other.data_->zero;
}

FiniteGroup FiniteGroup::from(InvSemigroup s) {
  if (s.idempotents().size() != 1)
    throw Error(Errc::InvalidParams, "a group has exactly one idempotent, found " +
                                         std::to_string(s.idempotents().size()));
  return FiniteGroup(std::move(s));
}

FiniteGroup FiniteGroup::trivial() { return from(InvSemigroup::validate({"1"}, {{0}})); }

bool natural_leq(const InvSemigroup& s, Id a, Id b) { return a == s.mul(b, s.star(a), a); }

std::vector<Id> SigmaMap::fiber(Id g) const {
  std::vector<Id> out;
  for (Id s = 0; s < classmap.size(); ++s)
    if (classmap[s] == g) out.push_back(s);
  return out;
}

SigmaMap max_group_image(const InvSemigroup& s) {
  // The minimum idempotent z lies below every idempotent, so s ~ t iff sz = tz.
  Id z = s.idempotents().front();
  for (Id e : s.idempotents()) z = s.mul(z, e);

  const std::size_t n = s.size();
  std::map<Id, Id> class_of_key;
  std::vector<Id> reps;
  std::vector<Id> classmap(n);
  for (Id x = 0; x < n; ++x) {
    const Id key = s.mul(x, z);
    auto [it, inserted] = class_of_key.emplace(key, reps.size());
    if (inserted) reps.push_back(x);
    classmap[x] = it->second;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Id>> table(k, std::vector<Id>(k));
  std::vector<std::string> names(k);
  for (Id i = 0; i < k; ++i) {
    names[i] = "[" + s.name(reps[i]) + "]";
    for (Id j = 0; j < k; ++j) table[i][j] = classmap[s.mul(reps[i], reps[j])];
  }
  return SigmaMap{FiniteGroup::from(InvSemigroup::validate(std::move(names), table)), std::move(classmap)};
}

bool is_e_unitary(const InvSemigroup& s, const SigmaMap& sigma) {
  const Id one = sigma.group.identity();
  for (Id x = 0; x < s.size(); ++x)
    if ((sigma(x) == one) != s.is_idempotent(x)) return false;
  return true;
}

bool is_e_unitary(const InvSemigroup& s) { return is_e_unitary(s, max_group_image(s)); }

bool is_zero_e_unitary(const InvSemigroup& s) {
  if (!s.has_zero()) throw Error(Errc::NoZero, "0-E-unitarity needs a zero");
  for (Id e : s.idempotents()) {
    if (s.is_zero(e)) continue;
    for (Id x = 0; x < s.size(); ++x)
      if (natural_leq(s, e, x) && !s.is_idempotent(x)) return false;
  }
  return true;
}

Id meet_sigma(const InvSemigroup& s, const SigmaMap& sigma, Id a, Id b) {
  if (a >= s.size() || b >= s.size()) throw Error(Errc::UnknownElement, "element id out of range");
  if (!is_e_unitary(s, sigma)) throw Error(Errc::NotEUnitary, "meet_sigma needs an E-unitary semigroup");
  if (sigma(a) != sigma(b)) throw Error(Errc::SigmaMismatch, "elements lie in different σ-classes", {a, b});
  return s.mul(b, s.star(a), a);
}

Id meet_sigma(const InvSemigroup& s, Id a, Id b) { return meet_sigma(s, max_group_image(s), a, b); }

bool is_ideal(const InvSemigroup& s, std::span<const Id> subset) {
  std::vector<bool> in(s.size(), false);
  for (Id x : subset) {
    if (x >= s.size()) return false;
    in[x] = true;
  }
  for (Id x : subset)
    for (Id y = 0; y < s.size(); ++y)
      if (!in[s.mul(x, y)] || !in[s.mul(y, x)]) return false;
  return true;
}

std::vector<std::vector<Id>> enumerate_ideals(const InvSemigroup& s) {
  constexpr std::size_t kMaxIdeals = std::size_t{1} << 16;
  const std::size_t n = s.size();
  std::set<std::vector<bool>> principal;
  for (Id x = 0; x < n; ++x) {
    std::vector<bool> j(n, false);
    j[x] = true;
    for (Id a = 0; a < n; ++a) {
      j[s.mul(a, x)] = true;
      j[s.mul(x, a)] = true;
      for (Id b = 0; b < n; ++b) j[s.mul(a, x, b)] = true;
    }
    principal.insert(std::move(j));
  }

  std::set<std::vector<bool>> ideals(principal.begin(), principal.end());
  std::deque<std::vector<bool>> frontier(principal.begin(), principal.end());
  while (!frontier.empty()) {
    const auto current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& p : principal) {
      auto u = current;
      for (Id x = 0; x < n; ++x) u[x] = u[x] || p[x];
      if (ideals.insert(u).second) {
        if (ideals.size() > kMaxIdeals)
          throw Error(Errc::SizeLimitExceeded, "too many ideals to enumerate");
        frontier.push_back(std::move(u));
      }
    }
  }

  std::vector<std::vector<Id>> out;
  for (const auto& mask : ideals) {
    std::vector<Id> ideal;
    for (Id x = 0; x < n; ++x)
      if (mask[x]) ideal.push_back(x);
    if (ideal.size() < n) out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReesQuotient rees_quotient(const InvSemigroup& s, std::span<const Id> ideal) {
  if (ideal.empty()) throw Error(Errc::NotAnIdeal, "the empty set is not collapsed by a Rees quotient");
  if (!is_ideal(s, ideal)) throw Error(Errc::NotAnIdeal, "subset is not closed under multiplication by S");
  std::vector<bool> in(s.size(), false);
  for (Id x : ideal) in[x] = true;
  if (static_cast<std::size_t>(std::count(in.begin(), in.end(), true)) == s.size())
    throw Error(Errc::ImproperIdeal, "the ideal is all of S");

  const Id first_in_ideal = *std::min_element(ideal.begin(), ideal.end());
  std::vector<Id> map(s.size(), kNone);
  std::vector<Id> reps;
  for (Id x = 0; x < s.size(); ++x) {
    if (in[x]) {
      if (x == first_in_ideal) {
        map[x] = reps.size();
        reps.push_back(x);
      }
    } else {
      map[x] = reps.size();
      reps.push_back(x);
    }
  }
  const Id zero = map[first_in_ideal];
  for (Id x : ideal) map[x] = zero;

  std::vector<std::string> names;
  for (Id r : reps) names.push_back(s.name(r));
  if (ideal.size() > 1) {
    std::string z = "0";
    while (std::find(names.begin(), names.end(), z) != names.end()) z += "'";
    names[zero] = z;
  }

  const std::size_t k = reps.size();
  std::vector<std::vector<Id>> table(k, std::vector<Id>(k));
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j) table[i][j] = map[s.mul(reps[i], reps[j])];
  return ReesQuotient{InvSemigroup::validate(std::move(names), table, zero), std::move(map)};
}

SemigroupMorphism SemigroupMorphism::validate(InvSemigroup source, InvSemigroup target, std::vector<Id> map) {
  if (map.size() != source.size()) throw Error(Errc::InvalidParams, "morphism map has wrong length");
  for (Id x : map)
    if (x >= target.size()) throw Error(Errc::InvalidParams, "morphism value out of range");
  for (Id a = 0; a < source.size(); ++a)
    for (Id b = 0; b < source.size(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw Error(Errc::NotAHomomorphism, "φ(ab) != φ(a)φ(b) at " + id_list({a, b}), {a, b});
  return SemigroupMorphism(std::move(source), std::move(target), std::move(map));
}

SemigroupMorphism SemigroupMorphism::identity(const InvSemigroup& s) {
  std::vector<Id> map(s.size());
  for (Id x = 0; x < s.size(); ++x) map[x] = x;
  return SemigroupMorphism(s, s, std::move(map));
}

SemigroupMorphism compose(const SemigroupMorphism& psi, const SemigroupMorphism& phi) {
  if (!(phi.target() == psi.source()))
    throw Error(Errc::InvalidParams, "morphisms are not composable");
  std::vector<Id> map(phi.source().size());
  for (Id x = 0; x < map.size(); ++x) map[x] = psi(phi(x));
  return SemigroupMorphism::validate(phi.source(), psi.target(), std::move(map));
}

SemigroupMorphism sigma_morphism(const InvSemigroup& s) {
  auto sigma = max_group_image(s);
  return SemigroupMorphism::validate(s, sigma.group.semigroup(), sigma.classmap);
}

bool is_f_morphism(const SemigroupMorphism& phi) {
  const auto& s = phi.source();
  std::vector<std::vector<Id>> fibers(phi.target().size());
  for (Id x = 0; x < s.size(); ++x) fibers[phi(x)].push_back(x);
  for (const auto& fiber : fibers) {
    if (fiber.empty()) continue;
    const bool has_max = std::any_of(fiber.begin(), fiber.end(), [&](Id m) {
      return std::all_of(fiber.begin(), fiber.end(), [&](Id x) { return natural_leq(s, x, m); });
    });
    if (!has_max) return false;
  }
  return true;
}

bool is_locally_idempotent_pure(const SemigroupMorphism& phi) {
  const auto& s = phi.source();
  for (Id e : s.idempotents())
    for (Id x = 0; x < s.size(); ++x)
      if (s.mul(e, x, e) == x && phi.target().is_idempotent(phi(x)) && !s.is_idempotent(x)) return false;
  return true;
}

bool is_idempotent_pure(const SemigroupMorphism& phi) {
  for (Id x = 0; x < phi.source().size(); ++x)
    if (phi.target().is_idempotent(phi(x)) && !phi.source().is_idempotent(x)) return false;
  return true;
}

PartialGroupHom PartialGroupHom::validate(InvSemigroup source, FiniteGroup target, std::vector<Id> map) {
  if (!source.has_zero()) throw Error(Errc::NoZero, "partial homomorphisms are defined on semigroups with zero");
  if (map.size() != source.size()) throw Error(Errc::InvalidParams, "partial hom map has wrong length");
  const Id zero = *source.zero();
  for (Id x = 0; x < map.size(); ++x) {
    if (x == zero) continue;
    if (map[x] >= target.size()) throw Error(Errc::InvalidParams, "partial hom value out of range", {x});
  }
  map[zero] = kNone;
  for (Id a = 0; a < source.size(); ++a) {
    if (a == zero) continue;
    for (Id b = 0; b < source.size(); ++b) {
      if (b == zero) continue;
      const Id ab = source.mul(a, b);
      if (ab != zero && map[ab] != target.mul(map[a], map[b]))
        throw Error(Errc::NotAPartialHom, "θ(ab) != θ(a)θ(b) at " + id_list({a, b}), {a, b});
    }
  }
  return PartialGroupHom(std::move(source), std::move(target), std::move(map));
}

bool is_idempotent_pure(const PartialGroupHom& theta) {
  const auto& s = theta.source();
  for (Id x = 0; x < s.size(); ++x) {
    if (s.is_zero(x)) continue;
    if ((theta(x) == theta.target().identity()) != s.is_idempotent(x)) return false;
  }
  return true;
}

EUnitaryCover eunitary_cover(const PartialGroupHom& theta) {
  if (!is_idempotent_pure(theta)) throw Error(Errc::NotIdempotentPure, "cover needs an idempotent pure θ");
  const auto& s = theta.source();
  const auto& g = theta.target();
  const Id zero = *s.zero();
  const std::size_t gn = g.size();
  auto encode = [gn](Id x, Id h) { return x * gn + h; };

  std::vector<Id> gens;
  for (Id x = 0; x < s.size(); ++x)
    if (x != zero) gens.push_back(encode(x, theta(x)));
  if (gens.empty()) throw Error(Errc::InvalidParams, "cover of the one-element semigroup is empty");

  std::set<Id> elements(gens.begin(), gens.end());
  std::deque<Id> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    const Id a = frontier.front();
    frontier.pop_front();
    for (Id b : gens) {
      const Id prod = encode(s.mul(a / gn, b / gn), g.mul(a % gn, b % gn));
      if (elements.insert(prod).second) {
        check_size(elements.size(), "E-unitary cover");
        frontier.push_back(prod);
      }
    }
  }

  const std::vector<Id> sorted(elements.begin(), elements.end());
  std::map<Id, Id> index;
  for (Id i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  const std::size_t m = sorted.size();
  std::vector<std::string> names(m);
  std::vector<Id> to_source(m), to_group(m), ideal;
  for (Id i = 0; i < m; ++i) {
    to_source[i] = sorted[i] / gn;
    to_group[i] = sorted[i] % gn;
    names[i] = "(" + s.name(to_source[i]) + "," + g.name(to_group[i]) + ")";
    if (to_source[i] == zero) ideal.push_back(i);
  }
  std::vector<std::vector<Id>> table(m, std::vector<Id>(m));
  for (Id i = 0; i < m; ++i)
    for (Id j = 0; j < m; ++j)
      table[i][j] = index.at(encode(s.mul(to_source[i], to_source[j]), g.mul(to_group[i], to_group[j])));
  auto cover = InvSemigroup::validate(std::move(names), table);
  if (!is_e_unitary(cover)) throw Error(Errc::InternalInvariant, "cover is not E-unitary");

  auto quotient = rees_quotient(cover, ideal);
  std::vector<Id> iso(quotient.quotient.size(), kNone);
  for (Id i = 0; i < m; ++i) {
    Id& slot = iso[quotient.map[i]];
    if (slot != kNone && slot != to_source[i])
      throw Error(Errc::InternalInvariant, "T/I → S is not well defined", {i});
    slot = to_source[i];
  }
  std::unordered_set<Id> hit(iso.begin(), iso.end());
  if (hit.size() != s.size() || hit.count(kNone))
    throw Error(Errc::InternalInvariant, "T/I → S is not a bijection");
  SemigroupMorphism::validate(quotient.quotient, s, iso);

  return EUnitaryCover{std::move(cover), std::move(ideal), std::move(to_source), std::move(to_group),
                       std::move(quotient), std::move(iso)};
}

}  // namespace germoid
