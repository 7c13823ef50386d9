#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germoid/io.hpp"
#include "germoid/semigroup.hpp"

namespace germoid {

struct VerifyReport {
  std::string check;
  std::string fixture;
  bool pass = false;
  bool skipped = false;
  std::string reason;          // why it was skipped, or what failed
  io::json sizes = io::json::object();
  std::vector<std::size_t> witness;
  double wall_ms = 0;

  /// Wall time is left out unless asked for, so reports stay reproducible.
  io::json to_json(bool timing = false) const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite in order) on one fixture. Unmet
/// preconditions produce skipped reports. Throws Error{InvalidParams} for an
/// unknown suite.
std::vector<VerifyReport> run_suite(std::string_view suite, const std::string& fixture, const InvSemigroup& s);

}  // namespace germoid
