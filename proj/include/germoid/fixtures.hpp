#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "germoid/semigroup.hpp"

namespace germoid::fixtures {

/// n-element chain; id 0 is the top "1". With `bottom_is_zero` the last
/// element is marked as the zero "0".
InvSemigroup chain(std::size_t n, bool bottom_is_zero = false);

/// ℤ/n with elements 1, g, g2, ...
InvSemigroup cyclic_group(std::size_t n);

/// A group from a Cayley table. Throws Error{InvalidParams} if it is not one.
InvSemigroup group_from_table(std::vector<std::string> names, const std::vector<std::vector<Id>>& table);

/// Brandt semigroup B(G, n): zero plus triples (i, g, j) with
/// (i,g,j)(k,h,l) = (i,gh,l) if j = k and 0 otherwise.
InvSemigroup brandt(const FiniteGroup& g, std::size_t n);

/// All partial bijections of an n-set under composition (st = s∘t).
InvSemigroup symmetric_inverse(std::size_t n);

/// E ⋊ G with (e,g)(f,h) = (e ∧ g·f, gh). `action[g][e]` is g·e.
/// Throws Error{InvalidParams | ActionNotByAutomorphisms}.
InvSemigroup semidirect(const InvSemigroup& semilattice, const FiniteGroup& g,
                        const std::vector<std::vector<Id>>& action);

InvSemigroup direct_product(const InvSemigroup& s, const InvSemigroup& t);
InvSemigroup adjoin_zero(const InvSemigroup& s);

/// Named desk-scale fixtures (see preset_names()).
InvSemigroup preset(std::string_view name);
std::vector<std::string> preset_names();

/// Random E-unitary semidirect product of a ℤ/m-invariant semilattice of
/// subsets with ℤ/m, at most `max_size` elements.
InvSemigroup random_semidirect(std::mt19937_64& rng, std::size_t max_size = 64);

struct FixtureParams {
  std::size_t n = 2;
  std::size_t group_order = 1;
  bool zero = false;
  std::string preset;
  std::uint64_t seed = 0;
  std::vector<InvSemigroup> operands;
};

/// Dispatches on kind ∈ {chain, group, brandt, symmetric_inverse, semidirect,
/// direct_product, adjoin_zero, preset}. Throws Error{InvalidParams}.
InvSemigroup generate_fixture(std::string_view kind, const FixtureParams& params);

}  // namespace germoid::fixtures
