#pragma once

// Brute-force reference computations. They read only the multiplication
// table and never call the constructions they are compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "germoid/groupoid.hpp"
#include "germoid/semigroup.hpp"

namespace oracle {

using germoid::Id;
using germoid::InvSemigroup;
using Set = std::set<Id>;

inline std::vector<Id> idempotents(const InvSemigroup& s) {
  std::vector<Id> out;
  for (Id a = 0; a < s.size(); ++a)
    if (s.mul(a, a) == a) out.push_back(a);
  return out;
}

// s ≤ t iff s = te for some idempotent e.
inline bool leq(const InvSemigroup& s, Id a, Id b) {
  for (Id e : idempotents(s))
    if (s.mul(b, e) == a) return true;
  return false;
}

inline Set up_closure(const InvSemigroup& s, const Set& x) {
  Set out;
  for (Id e : idempotents(s))
    for (Id y : x)
      if (s.mul(y, e) == y) out.insert(e);
  return out;
}

// Every non-empty up-closed, meet-closed subset of E, by subset enumeration.
inline std::vector<Set> filters(const InvSemigroup& s, bool contracted) {
  const auto e = idempotents(s);
  std::vector<Set> out;
  for (unsigned long mask = 1; mask < (1ul << e.size()); ++mask) {
    Set f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (mask >> i & 1) f.insert(e[i]);
    bool ok = !(contracted && s.zero() && f.count(*s.zero()));
    for (Id x : f)
      for (Id y : e) {
        if (s.mul(x, y) == x && !f.count(y)) ok = false;  // up-closed
        if (f.count(y) && !f.count(s.mul(x, y))) ok = false;  // meet-closed
      }
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

// Least congruence with group quotient: s ~ t iff se = te for some idempotent e.
inline std::vector<Id> sigma_classes(const InvSemigroup& s) {
  std::vector<Id> cls(s.size(), germoid::kNone);
  Id next = 0;
  for (Id a = 0; a < s.size(); ++a) {
    if (cls[a] != germoid::kNone) continue;
    for (Id b = a; b < s.size(); ++b)
      for (Id e : idempotents(s))
        if (s.mul(a, e) == s.mul(b, e)) {
          cls[b] = next;
          break;
        }
    ++next;
  }
  return cls;
}

inline bool e_unitary(const InvSemigroup& s) {
  for (Id a = 0; a < s.size(); ++a)
    for (Id e : idempotents(s))
      if (leq(s, e, a) && s.mul(a, a) != a) return false;
  return true;
}

// Greatest lower bound of a and b in the natural order, if any.
inline Id meet(const InvSemigroup& s, Id a, Id b) {
  std::vector<Id> lower;
  for (Id u = 0; u < s.size(); ++u)
    if (leq(s, u, a) && leq(s, u, b)) lower.push_back(u);
  for (Id u : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Id v) { return leq(s, v, u); })) return u;
  return germoid::kNone;
}

// β_s(F) = ↑{s f s* : f ∈ F}, defined when s*s ∈ F.
inline std::optional<Set> beta(const InvSemigroup& s, Id a, const Set& f) {
  if (!f.count(s.mul(s.star(a), a))) return std::nullopt;
  Set image;
  for (Id x : f) image.insert(s.mul(a, x, s.star(a)));
  return up_closure(s, image);
}

// Germ classes of β over the (plain) filter space: (a, F) ~ (b, F) iff some
// u ≤ a, b has u*u ∈ F. Returns a class id for every defined (a, F).
inline std::map<std::pair<Id, Id>, Id> germ_classes(const InvSemigroup& s, const std::vector<Set>& space) {
  std::map<std::pair<Id, Id>, Id> cls;
  Id next = 0;
  for (Id f = 0; f < space.size(); ++f)
    for (Id a = 0; a < s.size(); ++a) {
      if (!space[f].count(s.mul(s.star(a), a)) || cls.count({a, f})) continue;
      for (Id b = a; b < s.size(); ++b) {
        if (!space[f].count(s.mul(s.star(b), b))) continue;
        for (Id u = 0; u < s.size(); ++u)
          if (leq(s, u, a) && leq(s, u, b) && space[f].count(s.mul(s.star(u), u))) {
            cls.emplace(std::make_pair(b, f), next);
            break;
          }
      }
      ++next;
    }
  return cls;
}

// Every groupoid axiom through the public accessors only.
inline bool groupoid_axioms(const germoid::FiniteGroupoid& g) {
  const std::size_t n = g.num_arrows();
  for (Id u = 0; u < g.num_units(); ++u) {
    const Id i = g.identity(u);
    if (g.dom(i) != u || g.ran(i) != u) return false;
  }
  for (Id a = 0; a < n; ++a) {
    const Id inv = g.inverse(a);
    if (g.compose(a, g.identity(g.dom(a))) != a || g.compose(g.identity(g.ran(a)), a) != a) return false;
    if (g.compose(a, inv) != g.identity(g.ran(a)) || g.compose(inv, a) != g.identity(g.dom(a))) return false;
    for (Id b = 0; b < n; ++b) {
      const Id ab = g.compose(a, b);
      if ((ab != germoid::kNone) != (g.dom(a) == g.ran(b))) return false;
      if (ab == germoid::kNone) continue;
      if (g.dom(ab) != g.dom(b) || g.ran(ab) != g.ran(a)) return false;
      for (Id c = 0; c < n; ++c)
        if (g.compose(b, c) != germoid::kNone && g.compose(ab, c) != g.compose(a, g.compose(b, c))) return false;
    }
  }
  return true;
}

// Σ over orbits of the number of conjugacy classes of the isotropy group.
inline std::size_t center_dimension(const germoid::FiniteGroupoid& g) {
  std::vector<bool> seen(g.num_units(), false);
  std::size_t total = 0;
  for (Id u = 0; u < g.num_units(); ++u) {
    if (seen[u]) continue;
    for (Id a = 0; a < g.num_arrows(); ++a)
      if (g.dom(a) == u) seen[g.ran(a)] = true;
    std::vector<Id> iso;
    for (Id a = 0; a < g.num_arrows(); ++a)
      if (g.dom(a) == u && g.ran(a) == u) iso.push_back(a);
    std::set<Set> classes;
    for (Id x : iso) {
      Set c;
      for (Id y : iso) c.insert(g.compose(g.compose(y, x), g.inverse(y)));
      classes.insert(c);
    }
    total += classes.size();
  }
  return total;
}

}  // namespace oracle
