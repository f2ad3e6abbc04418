#pragma once

// Cover-based compactness relative to an ambient family and an enlarging
// operation, plus the statement suites that characterize it through
// filterbases, closure families and bases.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topolab/filters.hpp"

namespace topolab {

/// Ambient family 𝒜 (must contain X) and enlarger φ2.
class CoverSystem {
 public:
  /// Throws UsageError when X ∉ ambient or a member lies outside X.
  CoverSystem(Family ambient, Operation enlarger);

  const Family& ambient() const { return ambient_; }
  const Operation& enlarger() const { return enlarger_; }
  Subset universe() const { return enlarger_.topology().universe(); }

 private:
  Family ambient_;
  Operation enlarger_;
};

struct CompactnessVerdict {
  bool compact = true;
  std::optional<int> witness_point;
  /// Irredundant 𝒜-cover of the set whose enlargements all miss the point.
  std::optional<Family> witness_cover;
};

bool is_cover(const Family& cover, Subset a);

/// A is compact iff no point a ∈ A has an avoidance family
/// {U ∈ 𝒜 : a ∉ φ2(U)} covering A. On a finite ground set every cover is
/// finite and enlarging more members only grows the union, so a cover fails
/// exactly when its whole enlargement misses some point, and the largest
/// cover missing a given point is its avoidance family.
CompactnessVerdict is_compact(const CoverSystem& cs, Subset a);

inline constexpr std::size_t kBruteForceMaxAmbient = 20;

/// Literal quantifier evaluation over all subfamilies of the ambient family
/// and all of their subfamilies. Throws UsageError above 20 ambient members.
bool brute_force_compact(const CoverSystem& cs, Subset a);

enum class CompactnessKind {
  phi12,       // 𝒜 = φ1O(X), enlarger φ2
  phi12_open,  // 𝒜 = φ12O(X), plain covers
  base,        // 𝒜 = {φ2(U) : U ∈ φ1O(X)} ∪ {X}, plain covers
};

CoverSystem cover_system(const OpPair& p, CompactnessKind kind);
bool compactness_kind(const OpPair& p, Subset a, CompactnessKind kind);

enum class SetClass { H, N, s, S, compact };
/// The operation pair whose φ12-compact sets form the class.
std::pair<OperationName, OperationName> set_class_pair(SetClass c);
bool named_set_class(const Topology& t, Subset a, SetClass c);

// ---------------------------------------------------------------------------
// Quantification universes

struct QuantifierPolicy {
  /// Up to this many points, families of sets are enumerated exhaustively.
  int exhaustive_max_points = 3;
  /// Random families drawn per quantifier above the exhaustive limit.
  int random_families = 24;
  std::uint64_t seed = 0;
};

/// Families the characterization suites quantify over for one ground set.
struct QuantifiedFamilies {
  /// Filterbases: all of them when exhaustive; otherwise every principal
  /// base {c} plus random bases.
  std::vector<Family> filterbases;
  /// Families of nonempty sets: all antichains when exhaustive; otherwise
  /// every one-member family plus random families.
  std::vector<Family> nonempty_families;
  bool exhaustive = true;
  QuantifierPolicy policy;
};

QuantifiedFamilies make_quantified_families(int n, const QuantifierPolicy& policy);
/// Every family of nonempty subsets of an n-point set (n <= 3).
std::vector<Family> all_nonempty_families(int n);

/// All subfamilies of `f` when |f| <= 10, otherwise a seeded sample that
/// always includes the empty and every one-member subfamily (sampled
/// subfamilies have at most 10 members).
std::vector<Family> subfamilies(const Family& f, std::uint64_t seed, int samples);

// ---------------------------------------------------------------------------
// Statement suites. Every statement is evaluated independently and
// literally over the quantification universe.

struct Statement {
  std::string_view label;
  std::optional<bool> value;  // nullopt: could not be evaluated
};

struct CharacterizationResult {
  /// cover, filterbase_meets, maximal_meets, filterbase_inside,
  /// maximal_inside, closure_family_finite, closure_family_fip,
  /// filterbase_closure_miss, closed_family_dual, closed_family_dual_fip
  std::array<Statement, 10> statements;
};

CharacterizationResult characterize_compactness(const OpPair& p, Subset a, const QuantifiedFamilies& q);

struct BaseSuiteResult {
  bool hypothesis = false;
  std::array<Statement, 7> statements;
};

/// φ2 ≥ φ1 or φ2 ≥ ι, and every φ1-open U has φ2(U) φ1-open with
/// φ2(φ2(U)) ⊂ φ2(U).
bool base_suite_hypothesis(const OpPair& p);
BaseSuiteResult base_compactness_suite(const OpPair& p, Subset a, const QuantifierPolicy& policy);

struct SpaceSuiteResult {
  bool hypothesis = false;
  std::array<Statement, 9> statements;
};

SpaceSuiteResult space_compactness_suite(const OpPair& p);

struct AdditiveSuiteResult {
  bool hypothesis = false;
  std::array<Statement, 2> statements;
};

/// φ1 monotone and φ2(U ∪ V) = φ2(U) ∪ φ2(V) on φ1-open sets.
bool additive_suite_hypothesis(const OpPair& p);
AdditiveSuiteResult additive_compactness_suite(const OpPair& p, Subset a, const QuantifierPolicy& policy);

struct ClosedSpacePredicates {
  bool phi12_compact_space = false;
  bool hausdorff = false;
  bool s_closed = false;
  bool h_closed = false;
};

ClosedSpacePredicates closed_space_predicates(const Topology& t, const OpPair& p);

/// Aliases: on a finite ground set countable and Lindelöf variants of
/// cover compactness coincide with it.
inline CompactnessVerdict is_lindelof(const CoverSystem& cs, Subset a) { return is_compact(cs, a); }
inline CompactnessVerdict is_countably_compact(const CoverSystem& cs, Subset a) { return is_compact(cs, a); }

}  // namespace topolab
