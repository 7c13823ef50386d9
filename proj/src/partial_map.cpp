#include "germoid/partial_map.hpp"

#include <cstdlib>
#include <string>

#include "germoid/error.hpp"

namespace germoid {

std::size_t size_limit() {
  if (const char* env = std::getenv("GERMOID_SIZE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeLimit;
}

void check_size(std::size_t n, std::string_view what) {
  if (n > size_limit()) {
    throw Error(Errc::SizeLimitExceeded, std::string(what) + " has " + std::to_string(n) +
                                             " elements, limit is " + std::to_string(size_limit()));
  }
}

PartialMap PartialMap::identity(std::size_t n) {
  PartialMap m(n);
  for (Id x = 0; x < n; ++x) m.image_[x] = x;
  return m;
}

PartialMap PartialMap::identity_on(std::size_t n, std::span<const Id> domain) {
  PartialMap m(n);
  for (Id x : domain) m.image_.at(x) = x;
  return m;
}

std::vector<Id> PartialMap::domain() const {
  std::vector<Id> out;
  for (Id x = 0; x < image_.size(); ++x)
    if (image_[x] != kNone) out.push_back(x);
  return out;
}

std::vector<Id> PartialMap::range() const {
  std::vector<bool> hit(image_.size(), false);
  for (Id y : image_)
    if (y != kNone) hit.at(y) = true;
  std::vector<Id> out;
  for (Id y = 0; y < hit.size(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

bool PartialMap::empty() const {
  for (Id y : image_)
    if (y != kNone) return false;
  return true;
}

bool PartialMap::injective() const {
  std::vector<bool> hit(image_.size(), false);
  for (Id y : image_) {
    if (y == kNone) continue;
    if (y >= hit.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool PartialMap::total() const {
  for (Id y : image_)
    if (y == kNone) return false;
  return true;
}

PartialMap PartialMap::inverse() const {
  PartialMap inv(image_.size());
  for (Id x = 0; x < image_.size(); ++x) {
    if (image_[x] == kNone) continue;
    if (inv.image_.at(image_[x]) != kNone)
      throw Error(Errc::NotBijective, "partial map is not injective", {image_[x]});
    inv.image_[image_[x]] = x;
  }
  return inv;
}

PartialMap PartialMap::restricted_to(std::span<const Id> domain) const {
  PartialMap m(image_.size());
  for (Id x : domain)
    if (x < image_.size()) m.image_[x] = image_[x];
  return m;
}

bool PartialMap::restricts(const PartialMap& other) const {
  if (other.size() != size()) return false;
  for (Id x = 0; x < image_.size(); ++x)
    if (image_[x] != kNone && image_[x] != other.image_[x]) return false;
  return true;
}

PartialMap compose(const PartialMap& outer, const PartialMap& inner) {
  PartialMap out(inner.size());
  for (Id x = 0; x < inner.size(); ++x) {
    const Id y = inner(x);
    if (y != kNone && outer.defined(y)) out.set(x, outer(y));
  }
  return out;
}

std::pair<PartialMap, bool> merge(const PartialMap& a, const PartialMap& b) {
  PartialMap out = a;
  bool consistent = a.size() == b.size();
  for (Id x = 0; x < b.size() && x < out.size(); ++x) {
    if (!b.defined(x)) continue;
    if (out.defined(x) && out(x) != b(x)) {
      consistent = false;
      continue;
    }
    out.set(x, b(x));
  }
  return {out, consistent};
}

}  // namespace germoid
