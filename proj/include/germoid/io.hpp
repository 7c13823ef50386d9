#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "germoid/action.hpp"
#include "germoid/germs.hpp"
#include "germoid/groupoid.hpp"
#include "germoid/matrixrep.hpp"
#include "germoid/partact.hpp"
#include "germoid/semigroup.hpp"
#include "germoid/spectra.hpp"

namespace germoid::io {

using json = nlohmann::ordered_json;

json to_json(const InvSemigroup& s);
/// Throws Error{ParseError} on malformed input, or the validator's error.
InvSemigroup semigroup_from_json(const json& j);

json to_json(const FiniteGroupoid& g);
/// Groupoid JSON plus a "germ": [s, x] pair of names on every arrow.
json to_json(const GermGroupoid& g);
/// Throws Error{ParseError} or the groupoid validator's error.
FiniteGroupoid groupoid_from_json(const json& j);

json to_json(const CharSpace& space);
json to_json(const SAction& action, const std::string& semigroup_ref);

template <class Scalar>
json to_json(const DenseMatrix<Scalar>& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    entries.push_back(std::move(row));
  }
  return {{"rows", rows}, {"cols", cols}, {"entries", std::move(entries)}};
}

/// Sizes, certificates and per-condition results of a pipeline run.
json to_json(const KsResult& r);

/// Units as nodes, non-identity arrows as labelled edges.
std::string to_dot(const FiniteGroupoid& g, const std::string& name = "G");

/// Throws Error{ParseError} when the file cannot be read or parsed.
json read_json(const std::filesystem::path& path);
/// Throws Error{ParseError} when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace germoid::io
