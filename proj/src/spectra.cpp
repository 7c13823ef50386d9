#include "germoid/spectra.hpp"

#include <algorithm>

#include "germoid/error.hpp"

namespace germoid {

CharSpace CharSpace::of(InvSemigroup s, bool contracted) {
  if (contracted && !s.has_zero()) throw Error(Errc::ContractedWithoutZero, "contracted space needs a zero");
  std::vector<Id> mins;
  for (Id e : s.idempotents())
    if (!(contracted && s.is_zero(e))) mins.push_back(e);

  std::vector<Id> tight;
  if (contracted) {
    // Maximal proper filters are the principal filters of minimal non-zero idempotents.
    for (Id i = 0; i < mins.size(); ++i) {
      bool minimal = true;
      for (Id j = 0; j < mins.size() && minimal; ++j)
        if (j != i && s.mul(mins[j], mins[i]) == mins[j]) minimal = false;
      if (minimal) tight.push_back(i);
    }
  }
  return CharSpace(std::move(s), contracted, std::move(mins), std::move(tight));
}

std::optional<Id> CharSpace::filter_of(Id x) const {
  auto it = std::lower_bound(mins_.begin(), mins_.end(), x);
  if (it == mins_.end() || *it != x) return std::nullopt;
  return static_cast<Id>(it - mins_.begin());
}

std::vector<std::string> CharSpace::names() const {
  std::vector<std::string> out;
  for (Id f = 0; f < size(); ++f) out.push_back(name(f));
  return out;
}

std::vector<Id> d_set(const CharSpace& space, Id e) {
  const auto& s = space.semigroup();
  if (e >= s.size() || !s.is_idempotent(e)) throw Error(Errc::UnknownElement, "not an idempotent", {e});
  std::vector<Id> out;
  for (Id f = 0; f < space.size(); ++f)
    if (space.contains(f, e)) out.push_back(f);
  return out;
}

std::vector<Id> tight_spectrum(const CharSpace& space) {
  if (!space.contracted()) throw Error(Errc::ContractedWithoutZero, "tight spectrum lives in the contracted space");
  return space.tight();
}

DownsetCertificate downset_generators(const InvSemigroup& s, std::span<const Id> downset) {
  std::vector<bool> in(s.size(), false);
  for (Id x : downset) {
    if (x >= s.size()) throw Error(Errc::UnknownElement, "element out of range", {x});
    in[x] = true;
  }
  DownsetCertificate cert;
  for (Id x = 0; x < s.size(); ++x)
    if (in[x]) cert.downset.push_back(x);
  for (Id x : cert.downset)
    for (Id y = 0; y < s.size(); ++y)
      if (!in[y] && natural_leq(s, y, x)) throw Error(Errc::NotADownset, "not down-closed", {y, x});
  for (Id x : cert.downset) {
    bool maximal = true;
    for (Id y : cert.downset)
      if (y != x && natural_leq(s, x, y)) {
        maximal = false;
        break;
      }
    if (maximal) cert.generators.push_back(x);
  }
  return cert;
}

SemilatticeMap SemilatticeMap::validate(InvSemigroup source, InvSemigroup target, std::vector<Id> map) {
  if (map.size() != source.size()) throw Error(Errc::InvalidParams, "map must be indexed by source ids");
  for (Id x = 0; x < source.size(); ++x) {
    if (!source.is_idempotent(x)) {
      map[x] = kNone;
      continue;
    }
    if (map[x] >= target.size() || !target.is_idempotent(map[x]))
      throw Error(Errc::UnknownElement, "image is not an idempotent", {x});
  }
  for (Id e : source.idempotents())
    for (Id f : source.idempotents())
      if (map[source.mul(e, f)] != target.mul(map[e], map[f]))
        throw Error(Errc::NotMeetPreserving, "φ(ef) != φ(e)φ(f)", {e, f});
  return SemilatticeMap(std::move(source), std::move(target), std::move(map));
}

SemilatticeMap SemilatticeMap::from(const SemigroupMorphism& phi) {
  return validate(phi.source(), phi.target(), phi.map());
}

CoherenceReport is_coherent(const SemilatticeMap& phi) {
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  CoherenceReport report;
  report.targets = tgt.idempotents();
  for (Id t : report.targets) {
    std::vector<Id> pre;
    for (Id e : src.idempotents())
      if (tgt.mul(phi(e), t) == phi(e)) pre.push_back(e);
    report.preimages.push_back(downset_generators(src, pre));
    for (Id e : src.idempotents()) {
      std::vector<Id> local;
      for (Id x : pre)
        if (src.mul(x, e) == x) local.push_back(x);
      report.local.push_back({e, t, downset_generators(src, local)});
    }
  }
  return report;
}

std::vector<Id> hat_map(const SemilatticeMap& phi, const CharSpace& source, const CharSpace& target) {
  if (!(source.semigroup() == phi.source()) || !(target.semigroup() == phi.target()))
    throw Error(Errc::InvalidParams, "spaces do not match the map");
  std::vector<Id> out(source.size(), kNone);
  for (Id f = 0; f < source.size(); ++f)
    if (auto g = target.filter_of(phi(source.min(f)))) out[f] = *g;
  return out;
}

const KsCertificate* KsReport::find(Id e, Id f, Id t) const {
  for (const auto& c : certificates)
    if (c.e == e && c.f == f && c.t == t) return &c;
  return nullptr;
}

KsReport check_ks_condition(const SemigroupMorphism& phi) {
  const auto& s = phi.source();
  const auto& t = phi.target();
  KsReport report;
  for (Id e : s.idempotents())
    for (Id f : s.idempotents()) {
      std::vector<Id> esf;
      for (Id x = 0; x < s.size(); ++x)
        if (s.mul(e, x, f) == x) esf.push_back(x);
      for (Id target = 0; target < t.size(); ++target) {
        std::vector<Id> pre;
        for (Id x : esf)
          if (natural_leq(t, phi(x), target)) pre.push_back(x);
        report.certificates.push_back({e, f, target, downset_generators(s, pre)});
      }
    }
  return report;
}

SAction beta_action(const CharSpace& space) {
  const auto& s = space.semigroup();
  std::vector<PartialMap> maps(s.size(), PartialMap(space.size()));
  for (Id a = 0; a < s.size(); ++a) {
    const Id src = s.source_idempotent(a);
    for (Id f = 0; f < space.size(); ++f) {
      const Id x = space.min(f);
      if (s.mul(x, src) != x) continue;
      const auto image = space.filter_of(s.mul(a, x, s.star(a)));
      if (!image) throw Error(Errc::InternalInvariant, "β leaves the space", {a, f});
      maps[a].set(f, *image);
    }
  }
  return SAction::validate(s, space.names(), std::move(maps));
}

}  // namespace germoid
