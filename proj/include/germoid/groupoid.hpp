#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "germoid/semigroup.hpp"

namespace germoid {

struct ArrowData {
  std::string name;
  Id dom;
  Id ran;
};

/// Raw groupoid description: `comp` lists (a, b, ab) for every pair with
/// dom(a) = ran(b); `inv` lists (a, a⁻¹).
struct GroupoidData {
  std::vector<std::string> units;
  std::vector<ArrowData> arrows;
  std::vector<std::array<Id, 3>> comp;
  std::vector<std::pair<Id, Id>> inv;
};

/// A finite groupoid; identities are ordinary arrows.
class FiniteGroupoid {
 public:
  /// Checks every axiom exhaustively. Throws Error{DomainMismatch |
  /// UnknownUnit | MissingIdentity | MissingInverse |
  /// CompositionNotAssociative | InvalidParams}.
  static FiniteGroupoid validate(GroupoidData data);

  /// Materializes the composition and inversion tables, then validates.
  /// `compose(a, b)` is only called for composable pairs.
  static FiniteGroupoid build(std::vector<std::string> units, std::vector<ArrowData> arrows,
                              const std::function<Id(Id, Id)>& compose, const std::function<Id(Id)>& inverse);

  std::size_t num_units() const noexcept { return d_->data.units.size(); }
  std::size_t num_arrows() const noexcept { return d_->data.arrows.size(); }
  const std::string& unit_name(Id u) const { return d_->data.units.at(u); }
  const std::string& arrow_name(Id a) const { return d_->data.arrows.at(a).name; }
  Id dom(Id a) const { return d_->data.arrows[a].dom; }
  Id ran(Id a) const { return d_->data.arrows[a].ran; }
  Id identity(Id unit) const { return d_->identity.at(unit); }
  bool is_identity(Id a) const { return identity(dom(a)) == a; }
  Id inverse(Id a) const { return d_->inverse.at(a); }
  /// a·b, or kNone when dom(a) != ran(b).
  Id compose(Id a, Id b) const;

  /// Arrows x → y.
  const std::vector<Id>& hom(Id from, Id to) const;
  std::vector<Id> isotropy(Id unit) const { return hom(unit, unit); }
  /// Connected components as sorted unit lists, ordered by least unit.
  std::vector<std::vector<Id>> orbits() const;
  /// (orbit size, isotropy order) per orbit, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> shape() const;

  std::optional<Id> find_unit(std::string_view name) const;
  std::optional<Id> find_arrow(std::string_view name) const;
  const GroupoidData& data() const noexcept { return d_->data; }

 private:
  struct Impl {
    GroupoidData data;
    std::vector<Id> identity;
    std::vector<Id> inverse;
    std::unordered_map<std::uint64_t, Id> comp;
    std::vector<std::vector<Id>> homs;  // indexed from * units + to
  };
  explicit FiniteGroupoid(std::shared_ptr<const Impl> d) : d_(std::move(d)) {}
  std::shared_ptr<const Impl> d_;
};

/// Same units, arrow names and endpoints, in the same order.
bool identical(const FiniteGroupoid& a, const FiniteGroupoid& b);

FiniteGroupoid group_as_groupoid(const FiniteGroup& g);
/// Arrows (i, j): j → i on n units.
FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid unit_groupoid(std::size_t n);

class GroupoidFunctor {
 public:
  /// Throws Error{NotAFunctor | InvalidParams}.
  static GroupoidFunctor validate(FiniteGroupoid source, FiniteGroupoid target, std::vector<Id> unit_map,
                                  std::vector<Id> arrow_map);
  static GroupoidFunctor identity(const FiniteGroupoid& g);

  const FiniteGroupoid& source() const noexcept { return source_; }
  const FiniteGroupoid& target() const noexcept { return target_; }
  Id unit(Id u) const { return units_.at(u); }
  Id arrow(Id a) const { return arrows_.at(a); }
  const std::vector<Id>& unit_map() const noexcept { return units_; }
  const std::vector<Id>& arrow_map() const noexcept { return arrows_; }

 private:
  GroupoidFunctor(FiniteGroupoid s, FiniteGroupoid t, std::vector<Id> u, std::vector<Id> a)
      : source_(std::move(s)), target_(std::move(t)), units_(std::move(u)), arrows_(std::move(a)) {}
  FiniteGroupoid source_;
  FiniteGroupoid target_;
  std::vector<Id> units_;
  std::vector<Id> arrows_;
};

/// g∘f. Throws Error{InvalidParams} unless f lands where g starts.
GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);

struct FunctorReport {
  bool faithful = false;
  bool full = false;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool weak_equivalence = false;
};

FunctorReport functor_report(const GroupoidFunctor& f);

/// Bijective on units and arrows, and mutually inverse with `back` if given.
bool verify_isomorphism(const GroupoidFunctor& f, const std::optional<GroupoidFunctor>& back = std::nullopt);

/// Backtracking isomorphism search after an orbit/isotropy precheck.
/// Throws Error{SizeLimitExceeded} above 64 arrows on either side.
std::optional<GroupoidFunctor> find_isomorphism(const FiniteGroupoid& g, const FiniteGroupoid& h);

/// A groupoid acting on a finite set along an anchor p: X → units.
class GroupoidSpaceAction {
 public:
  /// `act(h, x)` is called for every h with dom(h) = p(x).
  /// Throws Error{InvalidAction | UnknownUnit | InvalidParams}.
  static GroupoidSpaceAction validate(FiniteGroupoid g, std::vector<std::string> points, std::vector<Id> anchor,
                                      const std::function<Id(Id, Id)>& act);

  const FiniteGroupoid& groupoid() const noexcept { return g_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  const std::string& point_name(Id x) const { return points_.at(x); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  Id anchor(Id x) const { return anchor_.at(x); }
  /// h·x, or kNone when dom(h) != p(x).
  Id apply(Id h, Id x) const;

 private:
  GroupoidSpaceAction(FiniteGroupoid g, std::vector<std::string> points, std::vector<Id> anchor,
                      std::unordered_map<std::uint64_t, Id> act)
      : g_(std::move(g)), points_(std::move(points)), anchor_(std::move(anchor)), act_(std::move(act)) {}
  FiniteGroupoid g_;
  std::vector<std::string> points_;
  std::vector<Id> anchor_;
  std::unordered_map<std::uint64_t, Id> act_;
};

struct SemidirectProduct {
  FiniteGroupoid groupoid;                 // H⋉X
  std::vector<std::pair<Id, Id>> pairs;    // arrow → (h, x)
  GroupoidFunctor projection;              // H⋉X → H
  /// The arrow (h, x), or kNone.
  Id arrow(Id h, Id x) const;
};

/// Units X, arrows (h, x) with d = x and r = hx, ordered lexicographically.
SemidirectProduct semidirect_product(const GroupoidSpaceAction& action);

struct ReducedGroupoid {
  FiniteGroupoid groupoid;
  std::vector<Id> unit_origin;
  std::vector<Id> arrow_origin;
  GroupoidFunctor inclusion;
};

/// The full subgroupoid on a unit subset. Throws Error{UnknownUnit}.
ReducedGroupoid reduction(const FiniteGroupoid& g, std::vector<Id> units);

struct FaithfulnessMap {
  std::vector<std::array<Id, 3>> images;  // g ↦ (r(g), d(g), F(g))
  bool injective = false;
};

FaithfulnessMap cocycle_faithfulness_map(const GroupoidFunctor& f);

struct EnvelopingAction {
  std::vector<std::pair<Id, Id>> representatives;  // point → least (h, e)
  GroupoidSpaceAction action;                       // H acting on X
  SemidirectProduct product;                        // H⋉X
  GroupoidFunctor alpha;                            // G → H⋉X
  FunctorReport alpha_report;
  bool projection_matches = false;                  // π∘α = F
};

/// X = {(h, e) : d(h) = F(e)}/∼ with (h, e) ∼ (h·F(g)⁻¹, r(g)) for d(g) = e.
/// Throws Error{NotFaithful}.
EnvelopingAction enveloping_action_of_functor(const GroupoidFunctor& f);

}  // namespace germoid
