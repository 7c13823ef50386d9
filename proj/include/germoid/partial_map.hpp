#pragma once

#include <span>
#include <utility>
#include <vector>

#include "germoid/types.hpp"

namespace germoid {

/// A partial self-map of {0, ..., n-1}; undefined points map to kNone.
class PartialMap {
 public:
  PartialMap() = default;
  explicit PartialMap(std::size_t n) : image_(n, kNone) {}
  explicit PartialMap(std::vector<Id> image) : image_(std::move(image)) {}

  static PartialMap identity(std::size_t n);
  static PartialMap identity_on(std::size_t n, std::span<const Id> domain);

  std::size_t size() const noexcept { return image_.size(); }
  bool defined(Id x) const { return x < image_.size() && image_[x] != kNone; }
  Id operator()(Id x) const { return x < image_.size() ? image_[x] : kNone; }
  void set(Id x, Id y) { image_.at(x) = y; }

  std::vector<Id> domain() const;
  std::vector<Id> range() const;
  const std::vector<Id>& raw() const noexcept { return image_; }
  bool empty() const;
  bool injective() const;
  bool total() const;

  /// Inverse of an injective map.
  PartialMap inverse() const;
  PartialMap restricted_to(std::span<const Id> domain) const;

  /// True when *this is a restriction of other.
  bool restricts(const PartialMap& other) const;

  bool operator==(const PartialMap&) const = default;

 private:
  std::vector<Id> image_;
};

/// outer ∘ inner, defined where inner is defined and outer is defined at its value.
PartialMap compose(const PartialMap& outer, const PartialMap& inner);

/// Union of two partial maps viewed as relations. The flag is false when the
/// maps disagree at a common point (the first value wins there).
std::pair<PartialMap, bool> merge(const PartialMap& a, const PartialMap& b);

}  // namespace germoid
