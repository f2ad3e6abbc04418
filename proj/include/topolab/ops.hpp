#pragma once

// Operations on a finite space: total maps P(X) -> P(X) that fix the empty
// set and dominate the interior. Every operation is tabulated up front, so
// all predicates below are exact finite scans.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

enum class OperationName { identity, interior, closure, cloint, introcl, scl, sint };

inline constexpr std::array<OperationName, 7> kCatalog = {
    OperationName::identity, OperationName::interior, OperationName::closure, OperationName::cloint,
    OperationName::introcl,  OperationName::scl,      OperationName::sint,
};

/// "identity", "int", "cl", "cloint", "introcl", "scl", "sint".
std::string_view to_string(OperationName name);
/// Accepts the names produced by to_string plus "iota" for the identity.
std::optional<OperationName> parse_operation_name(std::string_view text);

struct OperationViolation {
  enum class Kind { empty_not_fixed, interior_not_contained, wrong_size };
  Kind kind;
  Subset witness;
};

std::string describe(const OperationViolation& v, const GroundSet& ground);

class Operation {
 public:
  /// Throws SchemaError (with the violated condition and a witness subset)
  /// when `table` is not an operation on `topology`.
  Operation(Topology topology, std::vector<Subset> table, std::string name);

  const Topology& topology() const { return topology_; }
  const std::string& name() const { return name_; }
  std::span<const Subset> table() const { return table_; }
  Subset operator()(Subset a) const { return table_[a.bits()]; }

  friend bool operator==(const Operation& a, const Operation& b) {
    return a.topology_ == b.topology_ && a.table_ == b.table_;
  }

 private:
  Topology topology_;
  std::vector<Subset> table_;
  std::string name_;
};

std::optional<OperationViolation> check_operation(const Topology& t, std::span<const Subset> table);
bool is_operation(const Topology& t, std::span<const Subset> table);

Operation builtin(const Topology& t, OperationName name);
/// X \ φ(X \ A). Throws SchemaError if the result is not an operation.
Operation dual(const Operation& op);

/// φ1(A) ⊂ φ2(A) for every A. Throws UsageError across different spaces.
bool leq(const Operation& lhs, const Operation& rhs);
bool is_monotone(const Operation& op);

/// {A : A ⊂ φ(A)}
Family phi_open_family(const Operation& op);
/// Complements of the φ-open sets.
Family phi_closed_family(const Operation& op);

struct RegularityViolation {
  int point;
  Subset first;
  Subset second;
};

/// For every x and U, V in family(x) some W in family(x) has φ(W) ⊂ φ(U) ∩ φ(V).
bool is_regular_wrt(const Operation& op, const Family& family);
std::optional<RegularityViolation> find_regularity_violation(const Operation& op, const Family& family);

/// All N ⊂ X containing some member of family(x).
Family neighborhoods(const Family& family, int point, Subset universe);

}  // namespace topolab
