#pragma once

// Filters and filterbases on a finite ground set.
//
// Every filter on a finite set is principal, so a Filter is stored as its
// core (the intersection of its members); the members are exactly the
// supersets of the core. A filter F is coarser than F' (F ⊂ F') iff the core
// of F' lies inside the core of F.

#include <vector>

#include "topolab/phi12.hpp"

namespace topolab {

class Filter {
 public:
  /// Throws UsageError for an empty core.
  explicit Filter(Subset core);

  Subset core() const { return core_; }
  bool contains(Subset member) const { return core_.subset_of(member); }
  /// Every member of `coarser` is a member of *this.
  bool finer_than(const Filter& coarser) const { return core_.subset_of(coarser.core_); }
  bool is_maximal() const { return core_.count() == 1; }
  /// Explicit member list; only sensible for small spaces.
  Family members(Subset universe) const;

  friend bool operator==(Filter, Filter) = default;

 private:
  Subset core_;
};

/// Nonempty members and, for any two members, a third inside their
/// intersection. The empty family is not a filterbase.
bool is_filterbase(const Family& f);

/// Filter generated by a filterbase. Throws PreconditionError otherwise.
Filter generated_filter(const Family& base);

/// Which local family the convergence definitions quantify over.
enum class LocalSystem {
  phi1_open,      // φ1O(X, a)
  neighborhoods,  // N(φ1O(X), a): supersets of φ1-open sets containing a
};

bool converges(const Filter& f, const OpPair& p, int a);
bool accumulates(const Filter& f, const OpPair& p, int a);

/// Literal filterbase versions: some member inside each φ2(U), resp. `a` in
/// the closure of every member.
bool base_converges(const Family& base, const OpPair& p, int a,
                    LocalSystem local = LocalSystem::phi1_open);
bool base_accumulates(const Family& base, const OpPair& p, int a,
                      LocalSystem local = LocalSystem::phi1_open);

Subset limit_set(const Filter& f, const OpPair& p);
Subset adherence_set(const Filter& f, const OpPair& p);

/// Filter generated by {φ2(U) ∩ F : U ∈ φ1O(X, a), F ∈ f}. Requires φ2
/// regular w.r.t. φ1O(X) and f accumulating at a; throws PreconditionError
/// otherwise, and Error if the result fails its own postconditions.
Filter finer_convergent(const Filter& f, const OpPair& p, int a);

/// The principal ultrafilters at single points, in point order.
std::vector<Filter> maximal_filters(const Topology& t);

/// Distinct points have φ1-open neighbourhoods with disjoint φ2-images.
bool is_t2(const OpPair& p);

enum class NbhdVariant { plain, enlarged };

/// φ1O(X, a) (plain) or {φ2(U) : U ∈ φ1O(X, a)} (enlarged), checked to be a
/// filterbase converging to a.
Family nbhd_filterbase(const OpPair& p, int a, NbhdVariant variant);

enum class ClStarScan { singletons, all_cores };

/// Points to which some filter containing `a` converges.
Subset cl_star(const OpPair& p, Subset a, ClStarScan scan = ClStarScan::singletons);

/// Filter generated by {φ2(U) ∩ A : U ∈ φ1O(X, a)}: contains A and converges
/// to a. Requires regularity and a in the closure of A.
Filter convergent_filter_containing(const OpPair& p, Subset a_set, int a);

}  // namespace topolab
