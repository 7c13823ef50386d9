#include "germoid/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "germoid/error.hpp"

namespace germoid::fixtures {

namespace {

std::string unique_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

}  // namespace

InvSemigroup chain(std::size_t n, bool bottom_is_zero) {
  if (n == 0) throw Error(Errc::InvalidParams, "chain needs n >= 1");
  std::vector<std::string> names(n);
  names[0] = "1";
  const std::size_t middle = n - 1 - (bottom_is_zero && n > 1 ? 1 : 0);
  for (std::size_t i = 1; i <= middle; ++i) names[i] = middle == 1 ? "f" : "f" + std::to_string(i);
  if (bottom_is_zero && n > 1) names[n - 1] = "0";
  if (bottom_is_zero && n == 1) names[0] = "0";
  std::vector<std::vector<Id>> table(n, std::vector<Id>(n));
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) table[i][j] = std::max(i, j);
  return InvSemigroup::validate(std::move(names), table,
                                bottom_is_zero ? std::optional<Id>(n - 1) : std::nullopt);
}

InvSemigroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidParams, "cyclic group needs n >= 1");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i);
  std::vector<std::vector<Id>> table(n, std::vector<Id>(n));
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return InvSemigroup::validate(std::move(names), table);
}

InvSemigroup group_from_table(std::vector<std::string> names, const std::vector<std::vector<Id>>& table) {
  return FiniteGroup::from(InvSemigroup::validate(std::move(names), table)).semigroup();
}

InvSemigroup brandt(const FiniteGroup& g, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidParams, "brandt needs n >= 1");
  const std::size_t gn = g.size();
  const std::size_t size = 1 + n * n * gn;
  check_size(size, "brandt semigroup");
  // id 0 is zero; (i,h,j) ↦ 1 + (i*gn + h)*n + j, with 0-based i, j.
  auto encode = [&](Id i, Id h, Id j) { return 1 + (i * gn + h) * n + j; };
  std::vector<std::string> names(size);
  names[0] = "0";
  const std::string sep = n >= 10 ? "," : "";
  for (Id i = 0; i < n; ++i)
    for (Id h = 0; h < gn; ++h)
      for (Id j = 0; j < n; ++j)
        names[encode(i, h, j)] =
            gn == 1 ? "e" + std::to_string(i + 1) + sep + std::to_string(j + 1)
                    : "(" + std::to_string(i + 1) + "," + g.name(h) + "," + std::to_string(j + 1) + ")";
  std::vector<std::vector<Id>> table(size, std::vector<Id>(size, 0));
  for (Id a = 1; a < size; ++a)
    for (Id b = 1; b < size; ++b) {
      const Id ai = (a - 1) / n / gn, ah = (a - 1) / n % gn, aj = (a - 1) % n;
      const Id bi = (b - 1) / n / gn, bh = (b - 1) / n % gn, bj = (b - 1) % n;
      if (aj == bi) table[a][b] = encode(ai, g.mul(ah, bh), bj);
    }
  return InvSemigroup::validate(std::move(names), table, Id{0});
}

InvSemigroup symmetric_inverse(std::size_t n) {
  // Enumerate partial injections as image tuples, kNone-as-smallest lexicographic order.
  std::vector<std::vector<Id>> maps;
  std::vector<Id> current(n, kNone);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      maps.push_back(current);
      check_size(maps.size(), "symmetric inverse monoid");
      return;
    }
    current[x] = kNone;
    self(self, x + 1);
    for (Id y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      current[x] = y;
      self(self, x + 1);
      used[y] = false;
    }
    current[x] = kNone;
  };
  rec(rec, 0);

  std::map<std::vector<Id>, Id> index;
  for (Id i = 0; i < maps.size(); ++i) index[maps[i]] = i;
  std::vector<std::string> names;
  for (const auto& m : maps) {
    std::string nm = "[";
    for (std::size_t x = 0; x < n; ++x) {
      if (x > 0 && n >= 10) nm += " ";
      nm += m[x] == kNone ? "-" : std::to_string(m[x] + 1);
    }
    names.push_back(nm + "]");
  }
  const std::size_t size = maps.size();
  std::vector<std::vector<Id>> table(size, std::vector<Id>(size));
  for (Id a = 0; a < size; ++a)
    for (Id b = 0; b < size; ++b) {
      std::vector<Id> c(n, kNone);
      for (std::size_t x = 0; x < n; ++x)
        if (maps[b][x] != kNone) c[x] = maps[a][maps[b][x]];
      table[a][b] = index.at(c);
    }
  return InvSemigroup::validate(std::move(names), table, Id{0});
}

InvSemigroup semidirect(const InvSemigroup& e, const FiniteGroup& g, const std::vector<std::vector<Id>>& action) {
  if (e.idempotents().size() != e.size()) throw Error(Errc::InvalidParams, "semidirect needs a semilattice");
  if (action.size() != g.size()) throw Error(Errc::InvalidParams, "action needs one row per group element");
  for (Id h = 0; h < g.size(); ++h) {
    if (action[h].size() != e.size()) throw Error(Errc::InvalidParams, "action row has wrong length", {h});
    std::vector<Id> sorted = action[h];
    std::sort(sorted.begin(), sorted.end());
    for (Id i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw Error(Errc::ActionNotByAutomorphisms, "action is not a permutation", {h});
    for (Id a = 0; a < e.size(); ++a)
      for (Id b = 0; b < e.size(); ++b)
        if (action[h][e.mul(a, b)] != e.mul(action[h][a], action[h][b]))
          throw Error(Errc::ActionNotByAutomorphisms, "action does not preserve meets", {h, a, b});
  }
  for (Id a = 0; a < e.size(); ++a)
    if (action[g.identity()][a] != a) throw Error(Errc::ActionNotByAutomorphisms, "identity acts non-trivially", {a});
  for (Id h = 0; h < g.size(); ++h)
    for (Id k = 0; k < g.size(); ++k)
      for (Id a = 0; a < e.size(); ++a)
        if (action[g.mul(h, k)][a] != action[h][action[k][a]])
          throw Error(Errc::ActionNotByAutomorphisms, "(gh)·e != g·(h·e)", {h, k, a});

  const std::size_t gn = g.size();
  const std::size_t size = e.size() * gn;
  check_size(size, "semidirect product");
  std::vector<std::string> names(size);
  std::vector<std::vector<Id>> table(size, std::vector<Id>(size));
  for (Id a = 0; a < size; ++a) {
    names[a] = "(" + e.name(a / gn) + "," + g.name(a % gn) + ")";
    for (Id b = 0; b < size; ++b) {
      const Id ea = a / gn, ga = a % gn, eb = b / gn, gb = b % gn;
      table[a][b] = e.mul(ea, action[ga][eb]) * gn + g.mul(ga, gb);
    }
  }
  std::optional<Id> zero;
  if (gn == 1 && e.zero()) zero = *e.zero();
  auto s = InvSemigroup::validate(std::move(names), table, zero);
  if (!is_e_unitary(s)) throw Error(Errc::InternalInvariant, "semidirect product is not E-unitary");
  return s;
}

InvSemigroup direct_product(const InvSemigroup& s, const InvSemigroup& t) {
  const std::size_t tn = t.size();
  const std::size_t size = s.size() * tn;
  check_size(size, "direct product");
  std::vector<std::string> names(size);
  std::vector<std::vector<Id>> table(size, std::vector<Id>(size));
  for (Id a = 0; a < size; ++a) {
    names[a] = "(" + s.name(a / tn) + "," + t.name(a % tn) + ")";
    for (Id b = 0; b < size; ++b) table[a][b] = s.mul(a / tn, b / tn) * tn + t.mul(a % tn, b % tn);
  }
  std::optional<Id> zero;
  if (s.zero() && t.zero()) zero = *s.zero() * tn + *t.zero();
  return InvSemigroup::validate(std::move(names), table, zero);
}

InvSemigroup adjoin_zero(const InvSemigroup& s) {
  const std::size_t n = s.size();
  auto names = s.names();
  names.push_back(unique_name("0", names));
  std::vector<std::vector<Id>> table(n + 1, std::vector<Id>(n + 1, n));
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) table[a][b] = s.mul(a, b);
  return InvSemigroup::validate(std::move(names), table, Id{n});
}

namespace {

InvSemigroup v3() {
  // e1, e2 incomparable with meet b.
  return InvSemigroup::validate({"e1", "e2", "b"}, {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}});
}

InvSemigroup s3() {
  // 1 adjoined to the group {f, g} ≅ ℤ/2.
  return InvSemigroup::validate({"1", "f", "g"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 1}});
}

InvSemigroup sym3() {
  std::vector<std::vector<Id>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::string> names = {"()", "(23)", "(12)", "(123)", "(132)", "(13)"};
  std::vector<std::vector<Id>> table(6, std::vector<Id>(6));
  for (Id a = 0; a < 6; ++a)
    for (Id b = 0; b < 6; ++b) {
      std::vector<Id> c(3);
      for (Id x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<Id>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_from_table(std::move(names), table);
}

InvSemigroup antichain_with_zero(std::size_t atoms) {
  const std::size_t n = atoms + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back("a" + std::to_string(i + 1));
  names.push_back("0");
  std::vector<std::vector<Id>> table(n, std::vector<Id>(n, atoms));
  for (Id i = 0; i < atoms; ++i) table[i][i] = i;
  return InvSemigroup::validate(std::move(names), table, Id{atoms});
}

InvSemigroup sd6() {
  const auto z2 = FiniteGroup::from(cyclic_group(2));
  return semidirect(v3(), z2, {{0, 1, 2}, {1, 0, 2}});
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"trivial", "chain2", "chain3", "chain4", "v3", "antichain3z", "z2", "z3", "sym3", "s3",
          "s4", "sd6", "b2", "bz2", "i2", "i3", "s3z", "s4z", "sd6z"};
}

InvSemigroup preset(std::string_view name) {
  if (name == "trivial") return cyclic_group(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3, true);
  if (name == "chain4") return chain(4);
  if (name == "v3") return v3();
  if (name == "antichain3z") return antichain_with_zero(3);
  if (name == "z2") return cyclic_group(2);
  if (name == "z3") return cyclic_group(3);
  if (name == "sym3") return sym3();
  if (name == "s3") return s3();
  if (name == "s4") return direct_product(chain(2), cyclic_group(2));
  if (name == "sd6") return sd6();
  if (name == "b2") return brandt(FiniteGroup::trivial(), 2);
  if (name == "bz2") return brandt(FiniteGroup::from(cyclic_group(2)), 2);
  if (name == "i2") return symmetric_inverse(2);
  if (name == "i3") return symmetric_inverse(3);
  if (name == "s3z") return adjoin_zero(s3());
  if (name == "s4z") return adjoin_zero(preset("s4"));
  if (name == "sd6z") return adjoin_zero(sd6());
  throw Error(Errc::InvalidParams, "unknown preset '" + std::string(name) + "'");
}

InvSemigroup random_semidirect(std::mt19937_64& rng, std::size_t max_size) {
  if (max_size == 0) throw Error(Errc::InvalidParams, "max_size must be positive");
  for (;;) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t blocks = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t points = m * blocks;
    const std::uint64_t full = (std::uint64_t{1} << points) - 1;
    auto rotate = [&](std::uint64_t mask, std::size_t shift) {
      std::uint64_t out = 0;
      for (std::size_t p = 0; p < points; ++p)
        if (mask >> p & 1U) out |= std::uint64_t{1} << ((p / m) * m + (p % m + shift) % m);
      return out;
    };

    std::set<std::uint64_t> family;
    const std::size_t seeds = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, full);
    for (std::size_t i = 0; i < seeds; ++i) {
      const std::uint64_t mask = pick(rng);
      for (std::size_t k = 0; k < m; ++k) family.insert(rotate(mask, k));
    }
    bool grew = true;
    while (grew && family.size() * m <= max_size) {
      grew = false;
      const std::vector<std::uint64_t> snapshot(family.begin(), family.end());
      for (auto a : snapshot)
        for (auto b : snapshot)
          if (family.insert(a & b).second) grew = true;
    }
    if (family.size() * m > max_size) continue;

    std::vector<std::uint64_t> elems(family.begin(), family.end());
    std::sort(elems.begin(), elems.end(), [](auto a, auto b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    std::map<std::uint64_t, Id> index;
    for (Id i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    std::vector<std::string> names;
    for (auto mask : elems) {
      std::string nm = "{";
      bool first = true;
      for (std::size_t p = 0; p < points; ++p)
        if (mask >> p & 1U) {
          if (!first) nm += ",";
          nm += std::to_string(p);
          first = false;
        }
      names.push_back(nm + "}");
    }
    const std::size_t k = elems.size();
    std::vector<std::vector<Id>> table(k, std::vector<Id>(k));
    for (Id a = 0; a < k; ++a)
      for (Id b = 0; b < k; ++b) table[a][b] = index.at(elems[a] & elems[b]);
    std::optional<Id> zero;
    if (elems.back() == 0) zero = k - 1;
    auto semilattice = InvSemigroup::validate(std::move(names), table, zero);

    std::vector<std::vector<Id>> action(m, std::vector<Id>(k));
    for (std::size_t g = 0; g < m; ++g)
      for (Id a = 0; a < k; ++a) action[g][a] = index.at(rotate(elems[a], g));
    return semidirect(semilattice, FiniteGroup::from(cyclic_group(m)), action);
  }
}

InvSemigroup generate_fixture(std::string_view kind, const FixtureParams& p) {
  if (kind == "chain") return chain(p.n, p.zero);
  if (kind == "group") {
    if (!p.operands.empty()) return FiniteGroup::from(p.operands.front()).semigroup();
    return cyclic_group(p.n);
  }
  if (kind == "brandt") {
    const auto g = p.operands.empty() ? FiniteGroup::from(cyclic_group(p.group_order))
                                      : FiniteGroup::from(p.operands.front());
    return brandt(g, p.n);
  }
  if (kind == "symmetric_inverse") return symmetric_inverse(p.n);
  if (kind == "semidirect") {
    if (p.preset.empty() || p.preset == "sd6") {
      if (p.preset.empty() && p.seed != 0) {
        std::mt19937_64 rng(p.seed);
        return random_semidirect(rng, p.n > 2 ? p.n : 64);
      }
      return sd6();
    }
    if (p.preset == "random") {
      std::mt19937_64 rng(p.seed);
      return random_semidirect(rng, p.n > 2 ? p.n : 64);
    }
    throw Error(Errc::InvalidParams, "unknown semidirect preset '" + p.preset + "'");
  }
  if (kind == "direct_product") {
    if (p.operands.size() != 2) throw Error(Errc::InvalidParams, "direct_product needs two operands");
    return direct_product(p.operands[0], p.operands[1]);
  }
  if (kind == "adjoin_zero") {
    if (p.operands.size() != 1) throw Error(Errc::InvalidParams, "adjoin_zero needs one operand");
    return adjoin_zero(p.operands[0]);
  }
  if (kind == "preset") return preset(p.preset);
  throw Error(Errc::InvalidParams, "unknown fixture kind '" + std::string(kind) + "'");
}

}  // namespace germoid::fixtures
