#include "germoid/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "germoid/error.hpp"

namespace germoid::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const InvSemigroup& s) {
  json zero = nullptr;
  if (s.zero()) zero = *s.zero();
  return {{"elements", s.names()}, {"table", s.table()}, {"zero", zero}};
}

InvSemigroup semigroup_from_json(const json& j) {
  auto names = field<std::vector<std::string>>(j, "elements");
  auto table = field<std::vector<std::vector<Id>>>(j, "table");
  std::optional<Id> zero;
  if (j.contains("zero") && !j.at("zero").is_null()) zero = field<Id>(j, "zero");
  return InvSemigroup::validate(std::move(names), table, zero);
}

json to_json(const FiniteGroupoid& g) {
  const auto& d = g.data();
  json arrows = json::array();
  for (const auto& a : d.arrows)
    arrows.push_back({{"id", a.name}, {"dom", d.units[a.dom]}, {"ran", d.units[a.ran]}});
  json comp = json::array();
  for (const auto& [a, b, c] : d.comp) comp.push_back({d.arrows[a].name, d.arrows[b].name, d.arrows[c].name});
  json inv = json::array();
  for (const auto& [a, b] : d.inv) inv.push_back({d.arrows[a].name, d.arrows[b].name});
  return {{"units", d.units}, {"arrows", std::move(arrows)}, {"comp", std::move(comp)}, {"inv", std::move(inv)}};
}

json to_json(const GermGroupoid& g) {
  json out = to_json(g.groupoid);
  const auto& s = g.action.semigroup();
  for (Id a = 0; a < g.reps.size(); ++a) {
    const auto [elem, x] = g.reps[a];
    out["arrows"][a]["germ"] = {s.name(elem), g.action.point_name(x)};
  }
  return out;
}

FiniteGroupoid groupoid_from_json(const json& j) {
  GroupoidData d;
  d.units = field<std::vector<std::string>>(j, "units");
  std::map<std::string, Id> unit_id, arrow_id;
  for (Id u = 0; u < d.units.size(); ++u) unit_id[d.units[u]] = u;
  auto lookup = [](const std::map<std::string, Id>& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw Error(Errc::ParseError, "unknown name \"" + key + "\"");
    return it->second;
  };
  for (const auto& a : field<json>(j, "arrows")) {
    const auto name = field<std::string>(a, "id");
    arrow_id[name] = d.arrows.size();
    d.arrows.push_back({name, lookup(unit_id, field<std::string>(a, "dom")), lookup(unit_id, field<std::string>(a, "ran"))});
  }
  for (const auto& c : field<std::vector<std::array<std::string, 3>>>(j, "comp"))
    d.comp.push_back({lookup(arrow_id, c[0]), lookup(arrow_id, c[1]), lookup(arrow_id, c[2])});
  for (const auto& p : field<std::vector<std::array<std::string, 2>>>(j, "inv"))
    d.inv.emplace_back(lookup(arrow_id, p[0]), lookup(arrow_id, p[1]));
  return FiniteGroupoid::validate(std::move(d));
}

json to_json(const CharSpace& space) {
  json filters = json::array();
  for (Id m : space.mins()) filters.push_back({{"min", m}});
  return {{"filters", std::move(filters)}, {"contracted", space.contracted()}, {"tight", space.tight()}};
}

json to_json(const SAction& action, const std::string& semigroup_ref) {
  const auto& s = action.semigroup();
  json maps = json::object();
  for (Id a = 0; a < s.size(); ++a) {
    json pairs = json::array();
    for (Id x = 0; x < action.num_points(); ++x)
      if (const Id y = action.apply(a, x); y != kNone) pairs.push_back({x, y});
    maps[s.name(a)] = std::move(pairs);
  }
  return {{"semigroup", semigroup_ref}, {"points", action.points()}, {"maps", std::move(maps)}};
}

json to_json(const KsResult& r) {
  json certificates = json::array();
  for (const auto& c : r.ks.certificates)
    certificates.push_back({{"e", c.e}, {"f", c.f}, {"t", c.t}, {"generators", c.cert.generators}});
  return {
      {"sizes",
       {{"source_units", r.source.num_units()},
        {"source_arrows", r.source.num_arrows()},
        {"target_groupoid_arrows", r.induced.target.groupoid().num_arrows()},
        {"points", r.target_action.num_points()},
        {"germ_units", r.target_germs.groupoid.num_units()},
        {"germ_arrows", r.target_germs.groupoid.num_arrows()}}},
      {"certificates", std::move(certificates)},
      {"conditions",
       {{"ks", r.ks.holds},
        {"faithful", r.faithfulness.injective},
        {"weak_equivalence", r.alpha_report.weak_equivalence},
        {"projection_matches", r.projection_matches},
        {"equiv", r.equiv_holds},
        {"closed_identity", r.closed_identity},
        {"centers_agree", r.source_center == r.target_center}}},
      {"centers", {r.source_center, r.target_center}},
      {"pass", r.holds()}};
}

std::string to_dot(const FiniteGroupoid& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (Id u = 0; u < g.num_units(); ++u) out << "  u" << u << " [label=" << quoted(g.unit_name(u)) << "];\n";
  for (Id a = 0; a < g.num_arrows(); ++a)
    if (!g.is_identity(a))
      out << "  u" << g.dom(a) << " -> u" << g.ran(a) << " [label=" << quoted(g.arrow_name(a)) << "];\n";
  out << "}\n";
  return out.str();
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Error(Errc::ParseError, "cannot write " + path.string());
}

}  // namespace germoid::io
