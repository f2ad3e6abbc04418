#pragma once

// Interior and closure induced by a pair of operations (φ1, φ2):
//
//   x ∈ int A  ⇔  some φ1-open U ∋ x has φ2(U) ⊂ A
//   x ∈ cl A   ⇔  every φ1-open U ∋ x has φ2(U) ∩ A ≠ ∅
//
// plus the open/closed families they induce, structure classification and
// the catalog of classical families (semi-open, regular open, θ-open, ...)
// built by routes that do not go through OpPair.

#include <string>
#include <vector>

#include "topolab/ops.hpp"

namespace topolab {

class OpPair {
 public:
  /// Throws UsageError if the operations live on different spaces.
  OpPair(Operation phi1, Operation phi2);
  static OpPair of(const Topology& t, OperationName first, OperationName second);

  const Operation& phi1() const { return phi1_; }
  const Operation& phi2() const { return phi2_; }
  const Topology& topology() const { return phi1_.topology(); }
  Subset universe() const { return topology().universe(); }
  /// "int,cl"
  std::string label() const { return phi1_.name() + "," + phi2_.name(); }

  /// φ1O(X), computed once.
  const Family& phi1_open() const { return phi1_open_; }

  Subset interior(Subset a) const { return interior_[a.bits()]; }
  Subset closure(Subset a) const { return universe() - interior_[(universe() - a).bits()]; }
  std::span<const Subset> interior_table() const { return interior_; }

 private:
  Operation phi1_;
  Operation phi2_;
  Family phi1_open_;
  std::vector<Subset> interior_;
};

inline Subset phi12_int(const OpPair& p, Subset a) { return p.interior(a); }
inline Subset phi12_cl(const OpPair& p, Subset a) { return p.closure(a); }
/// The closure evaluated point by point from its definition, without going
/// through the interior table.
Subset phi12_cl_pointwise(const OpPair& p, Subset a);

Family phi12_open_family(const OpPair& p);
Family phi12_closed_family(const OpPair& p);

struct KuratowskiFlags {
  bool preserves_empty = false;
  bool extensive = false;
  bool idempotent = false;
  bool additive = false;
  bool all() const { return preserves_empty && extensive && idempotent && additive; }
};

/// Checks the four closure axioms on a full table over 2^n subsets.
KuratowskiFlags check_kuratowski(std::span<const Subset> table, Subset universe);

/// Closure of `a` in the space whose open sets are `opens` (smallest member
/// complement containing `a`).
Subset closure_in(const Family& opens, Subset a, Subset universe);

struct StructureReport {
  bool is_supratopology = false;
  bool is_topology = false;
  /// K closed in the induced family ⇔ cl K ⊂ K, for every K.
  bool closed_iff_cl_subset = false;
  /// K closed in the induced family ⇔ cl K = K, for every K.
  bool closed_iff_cl_equal = false;
  bool is_kuratowski = false;
  KuratowskiFlags kuratowski;
};

StructureReport classify_structure(const OpPair& p);

enum class NamedFamily {
  SO, SC, PO, PC, RO, RC, SR,
  tau_theta, tau_s, SthetaO, SthetaC, thetaSO, thetaSC,
};

std::string_view to_string(NamedFamily name);

/// Builds the family from its classical definition using only the open sets
/// of `t`; never goes through OpPair.
Family named_family(const Topology& t, NamedFamily name);

/// {φ2(U) : U ∈ φ1O(X)}
Family enlargement_base(const OpPair& p);

/// Every member of `target` is a union of members of `base` it contains.
bool is_base_for(const Family& base, const Family& target);

struct BaseTheoremCheck {
  /// φ2(U) is φ1-open and φ2(φ2(U)) ⊂ φ2(U) for every φ1-open U.
  bool images_stable = false;
  bool phi1_open_in_phi2_open = false;
  bool base_in_phi12_open = false;
  /// φ2 ≥ φ1 or φ2 ≥ ι.
  bool dominates = false;

  bool base_in_both_families = false;  // base ⊂ φ12O ∩ φ1O
  bool is_base = false;

  bool hypothesis_stable() const { return images_stable; }
  bool hypothesis_inclusion() const { return phi1_open_in_phi2_open && base_in_phi12_open; }
  bool hypothesis_dominated() const { return dominates && base_in_phi12_open; }
  bool hypothesis_dominated_stable() const { return dominates && images_stable; }
};

BaseTheoremCheck check_base_theorem(const OpPair& p);

}  // namespace topolab
