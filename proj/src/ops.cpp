#include "topolab/ops.hpp"

#include <algorithm>

namespace topolab {

std::string_view to_string(OperationName name) {
  switch (name) {
    case OperationName::identity: return "identity";
    case OperationName::interior: return "int";
    case OperationName::closure: return "cl";
    case OperationName::cloint: return "cloint";
    case OperationName::introcl: return "introcl";
    case OperationName::scl: return "scl";
    case OperationName::sint: return "sint";
  }
  return "?";
}

std::optional<OperationName> parse_operation_name(std::string_view text) {
  if (text == "iota") return OperationName::identity;
  for (OperationName n : kCatalog) {
    if (to_string(n) == text) return n;
  }
  return std::nullopt;
}

std::string describe(const OperationViolation& v, const GroundSet& ground) {
  switch (v.kind) {
    case OperationViolation::Kind::empty_not_fixed:
      return "empty set is not mapped to the empty set (image " + ground.format(v.witness) + ")";
    case OperationViolation::Kind::interior_not_contained:
      return "interior of " + ground.format(v.witness) + " is not contained in its image";
    case OperationViolation::Kind::wrong_size:
      return "table does not have one entry per subset";
  }
  return "unknown violation";
}

std::optional<OperationViolation> check_operation(const Topology& t, std::span<const Subset> table) {
  using Kind = OperationViolation::Kind;
  if (table.size() != t.ground().subset_count()) return OperationViolation{Kind::wrong_size, {}};
  const Subset x = t.universe();
  if (!table[0].empty()) return OperationViolation{Kind::empty_not_fixed, table[0]};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    if (!table[i].subset_of(x)) return OperationViolation{Kind::interior_not_contained, a};
    if (!t.interior(a).subset_of(table[i])) return OperationViolation{Kind::interior_not_contained, a};
  }
  return std::nullopt;
}

bool is_operation(const Topology& t, std::span<const Subset> table) { return !check_operation(t, table); }

Operation::Operation(Topology topology, std::vector<Subset> table, std::string name)
    : topology_(std::move(topology)), table_(std::move(table)), name_(std::move(name)) {
  if (auto v = check_operation(topology_, table_)) {
    throw SchemaError("'" + name_ + "' is not an operation: " + describe(*v, topology_.ground()));
  }
}

Operation builtin(const Topology& t, OperationName name) {
  std::vector<Subset> table(t.ground().subset_count());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    switch (name) {
      case OperationName::identity: table[i] = a; break;
      case OperationName::interior: table[i] = t.interior(a); break;
      case OperationName::closure: table[i] = t.closure(a); break;
      case OperationName::cloint: table[i] = t.closure(t.interior(a)); break;
      case OperationName::introcl: table[i] = t.interior(t.closure(a)); break;
      case OperationName::scl: table[i] = a | t.interior(t.closure(a)); break;
      case OperationName::sint: table[i] = a & t.closure(t.interior(a)); break;
    }
  }
  return Operation(t, std::move(table), std::string(to_string(name)));
}

Operation dual(const Operation& op) {
  const Subset x = op.topology().universe();
  std::vector<Subset> table(op.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    table[i] = x - op(x - a);
  }
  if (auto v = check_operation(op.topology(), table)) {
    throw SchemaError("dual of '" + op.name() + "' is not an operation: " +
                      describe(*v, op.topology().ground()));
  }
  return Operation(op.topology(), std::move(table), "dual(" + op.name() + ")");
}

bool leq(const Operation& lhs, const Operation& rhs) {
  if (!(lhs.topology() == rhs.topology())) throw UsageError("operations are defined over different spaces");
  for (std::size_t i = 0; i < lhs.table().size(); ++i) {
    if (!lhs.table()[i].subset_of(rhs.table()[i])) return false;
  }
  return true;
}

bool is_monotone(const Operation& op) {
  // Checking single-point extensions A ⊂ A ∪ {p} suffices by transitivity.
  const auto table = op.table();
  const int n = op.topology().size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (int p = 0; p < n; ++p) {
      const std::size_t j = i | (std::size_t{1} << p);
      if (j != i && !table[i].subset_of(table[j])) return false;
    }
  }
  return true;
}

Family phi_open_family(const Operation& op) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < op.table().size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    if (a.subset_of(op.table()[i])) out.push_back(a);
  }
  return Family(std::move(out));
}

Family phi_closed_family(const Operation& op) {
  return phi_open_family(op).complements(op.topology().universe());
}

std::optional<RegularityViolation> find_regularity_violation(const Operation& op, const Family& family) {
  const int n = op.topology().size();
  for (int x = 0; x < n; ++x) {
    const Family local = family.containing(x);
    std::vector<Subset> images;
    images.reserve(local.size());
    for (Subset u : local) images.push_back(op(u));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    // below[m]: some image lies inside m. Only built for large image sets.
    std::vector<bool> below;
    if (images.size() > 64) {
      below.assign(std::size_t{1} << n, false);
      for (Subset w : images) below[w.bits()] = true;
      for (int b = 0; b < n; ++b) {
        for (std::size_t m = 0; m < below.size(); ++m) {
          if ((m >> b) & 1U) below[m] = below[m] || below[m ^ (std::size_t{1} << b)];
        }
      }
    }
    auto has_below = [&](Subset m) {
      if (!below.empty()) return static_cast<bool>(below[m.bits()]);
      return std::any_of(images.begin(), images.end(), [&](Subset w) { return w.subset_of(m); });
    };

    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (has_below(images[i] & images[j])) continue;
        Subset u, v;
        for (Subset s : local) {
          if (op(s) == images[i] && u.empty()) u = s;
          if (op(s) == images[j] && v.empty()) v = s;
        }
        return RegularityViolation{x, std::min(u, v), std::max(u, v)};
      }
    }
  }
  return std::nullopt;
}

bool is_regular_wrt(const Operation& op, const Family& family) {
  return !find_regularity_violation(op, family);
}

Family neighborhoods(const Family& family, int point, Subset universe) {
  const Family local = family.containing(point);
  std::vector<Subset> out;
  if (local.empty()) return {};
  const Mask count = universe.bits() + 1;
  for (Mask m = 0; m < count; ++m) {
    const Subset s(m);
    if (!s.subset_of(universe)) continue;
    if (std::any_of(local.begin(), local.end(), [&](Subset u) { return u.subset_of(s); })) out.push_back(s);
  }
  return Family(std::move(out));
}

}  // namespace topolab
