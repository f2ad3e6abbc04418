#pragma once

// Finite topological spaces over ground sets of at most 16 points.
//
// Subsets are bitmasks. A Topology is a cheap-to-copy handle around an
// immutable family of open sets plus the minimal open neighbourhood of
// every point, which is what interior and closure are computed from.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/error.hpp"

namespace topolab {

inline constexpr int kMaxPoints = 16;
inline constexpr int kMaxExhaustivePoints = 4;

using Mask = std::uint32_t;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  static constexpr Subset singleton(int point) { return Subset(Mask{1} << point); }
  /// All points 0..n-1.
  static constexpr Subset full(int n) { return Subset(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest point in the set; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Mask bits_ = 0;
};

/// Calls `f(point)` for each point of `s` in ascending order.
template <class F>
constexpr void for_each_point(Subset s, F&& f) {
  for (Mask m = s.bits(); m != 0; m &= m - 1) f(std::countr_zero(m));
}

class GroundSet {
 public:
  GroundSet() = default;
  /// Throws SchemaError on duplicate labels or more than kMaxPoints points.
  explicit GroundSet(std::vector<std::string> labels);
  /// Points labelled "0", "1", ...
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  Subset universe() const { return Subset::full(size()); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int point) const { return labels_.at(point); }
  std::optional<int> index_of(std::string_view label) const;
  /// "{a,b}" style rendering; "{}" for the empty set.
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Duplicate-free family of subsets kept in ascending bitmask order.
class Family {
 public:
  Family() = default;
  Family(std::initializer_list<Subset> members);
  explicit Family(std::vector<Subset> members);

  std::span<const Subset> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subset& operator[](std::size_t i) const { return members_[i]; }

  bool contains(Subset s) const;
  bool subfamily_of(const Family& other) const;
  /// Members that contain `point`.
  Family containing(int point) const;
  /// Union of all members.
  Subset join() const;
  /// Intersection of all members; `universe` for the empty family.
  Subset meet(Subset universe) const;
  /// {X \ A : A in family}.
  Family complements(Subset universe) const;

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  std::vector<Subset> members_;
};

Family all_subsets(int n);
bool is_union_closed(const Family& f);
bool is_intersection_closed(const Family& f);

struct TopologyViolation {
  enum class Kind { missing_empty, missing_universe, union_not_closed, intersection_not_closed };
  Kind kind;
  Subset first;
  Subset second;
};

std::string describe(const TopologyViolation& v, const GroundSet& ground);

class Topology {
 public:
  /// Indiscrete topology on the empty ground set.
  Topology();
  /// Validates the family; throws SchemaError naming the violated axiom.
  Topology(GroundSet ground, Family opens);

  const GroundSet& ground() const { return impl_->ground; }
  int size() const { return impl_->ground.size(); }
  Subset universe() const { return impl_->ground.universe(); }
  const Family& opens() const { return impl_->opens; }
  bool is_open(Subset s) const { return impl_->opens.contains(s); }
  bool is_closed(Subset s) const { return is_open(universe() - s); }
  /// Smallest open set containing `point`.
  Subset minimal_neighbourhood(int point) const { return impl_->minimal[point]; }

  Subset interior(Subset a) const;
  Subset closure(Subset a) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.impl_ == b.impl_ || (a.ground() == b.ground() && a.opens() == b.opens());
  }

 private:
  struct Impl {
    GroundSet ground;
    Family opens;
    std::vector<Subset> minimal;
  };
  struct Trusted {};
  Topology(Trusted, GroundSet ground, Family opens);
  friend Topology build_topology(const GroundSet&, const Family&);
  friend Topology topology_from_minimal(const GroundSet&, std::vector<Subset>);

  std::shared_ptr<const Impl> impl_;
};

/// Smallest topology containing every member of `subbasis`.
Topology build_topology(const GroundSet& ground, const Family& subbasis);
bool is_topology(const GroundSet& ground, const Family& family);
/// First violated axiom (lowest bitmasks first), if any.
std::optional<TopologyViolation> find_topology_violation(const GroundSet& ground, const Family& family);

inline Subset interior(const Topology& t, Subset a) { return t.interior(a); }
inline Subset closure(const Topology& t, Subset a) { return t.closure(a); }

/// Visits every topology on n points (n <= 4) in ascending family-bitmask
/// order. Throws UsageError for larger n.
void for_each_topology(int n, const std::function<void(const Topology&)>& visit);
std::vector<Topology> enumerate_topologies(int n);

/// Deterministic in (n, seed): the topology generated by `subbasis_size`
/// uniformly drawn subsets.
Topology random_topology(int n, std::uint64_t seed, int subbasis_size);

namespace fixtures {
/// ({0,1}, {{}, {0}, X})
Topology sierpinski();
/// ({a,b,c}, {{}, {a}, {a,b}, X})
Topology chain3();
Topology discrete(int n);
Topology indiscrete(int n);
}  // namespace fixtures

}  // namespace topolab
