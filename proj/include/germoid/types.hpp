#pragma once

#include <cstddef>
#include <limits>
#include <string_view>

namespace germoid {

/// Canonical integer id of an element, point, unit or arrow.
using Id = std::size_t;
inline constexpr Id kNone = std::numeric_limits<Id>::max();

inline constexpr std::size_t kDefaultSizeLimit = 4096;

/// Element-count guard for every construction; GERMOID_SIZE_LIMIT overrides it.
std::size_t size_limit();
void check_size(std::size_t n, std::string_view what);

}  // namespace germoid
