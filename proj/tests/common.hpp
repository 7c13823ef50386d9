#pragma once

#include <string>
#include <vector>

#include "germoid/fixtures.hpp"
#include "germoid/semigroup.hpp"

namespace testing {

struct Named {
  std::string name;
  germoid::InvSemigroup s;
};

inline std::vector<Named> presets() {
  std::vector<Named> out;
  for (const auto& name : germoid::fixtures::preset_names()) out.push_back({name, germoid::fixtures::preset(name)});
  return out;
}

inline std::vector<Named> e_unitary_presets() {
  std::vector<Named> out;
  for (auto& p : presets())
    if (germoid::is_e_unitary(p.s)) out.push_back(std::move(p));
  return out;
}

inline std::vector<Named> presets_with_zero() {
  std::vector<Named> out;
  for (auto& p : presets())
    if (p.s.has_zero()) out.push_back(std::move(p));
  return out;
}

inline germoid::Id id(const germoid::InvSemigroup& s, const std::string& name) { return s.find(name).value(); }

}  // namespace testing

namespace testing {

/// B2 → ℤ/2 sending e12 and e21 to the generator; idempotent pure.
inline germoid::PartialGroupHom b2_theta() {
  const auto b2 = germoid::fixtures::preset("b2");
  std::vector<germoid::Id> map(b2.size(), 0);
  map[id(b2, "e12")] = 1;
  map[id(b2, "e21")] = 1;
  return germoid::PartialGroupHom::validate(b2, germoid::FiniteGroup::from(germoid::fixtures::cyclic_group(2)), map);
}

}  // namespace testing
