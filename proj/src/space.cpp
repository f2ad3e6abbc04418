#include "topolab/space.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace topolab {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw SchemaError("ground set has " + std::to_string(labels_.size()) + " points; at most " +
                      std::to_string(kMaxPoints) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw SchemaError("duplicate point label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(int n) {
  if (n < 0 || n > kMaxPoints) throw UsageError("ground set size out of range: " + std::to_string(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](int p) {
    if (!first) out += ',';
    out += p < size() ? labels_[p] : "?" + std::to_string(p);
    first = false;
  });
  return out + "}";
}

// ---------------------------------------------------------------------------

Family::Family(std::initializer_list<Subset> members) : Family(std::vector<Subset>(members)) {}

Family::Family(std::vector<Subset> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

bool Family::subfamily_of(const Family& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Family Family::containing(int point) const {
  Family out;
  for (Subset s : members_) {
    if (s.contains(point)) out.members_.push_back(s);
  }
  return out;
}

Subset Family::join() const {
  Subset out;
  for (Subset s : members_) out |= s;
  return out;
}

Subset Family::meet(Subset universe) const {
  Subset out = universe;
  for (Subset s : members_) out &= s;
  return out;
}

Family Family::complements(Subset universe) const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (Subset s : members_) out.push_back(universe - s);
  return Family(std::move(out));
}

Family all_subsets(int n) {
  std::vector<Subset> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Subset(static_cast<Mask>(i));
  return Family(std::move(out));
}

bool is_union_closed(const Family& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!f.contains(f[i] | f[j])) return false;
    }
  }
  return true;
}

bool is_intersection_closed(const Family& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!f.contains(f[i] & f[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subset> minimal_neighbourhoods(int n, const Family& family) {
  const Subset x = Subset::full(n);
  std::vector<Subset> minimal(n, x);
  for (Subset s : family) {
    for_each_point(s, [&](int p) { minimal[p] &= s; });
  }
  return minimal;
}

// Every A with minimal[x] ⊂ A for all x in A, ascending.
std::vector<Subset> up_closed_sets(int n, const std::vector<Subset>& minimal) {
  std::vector<Subset> out;
  const Mask count = Mask{1} << n;
  for (Mask m = 0; m < count; ++m) {
    const Subset a(m);
    bool ok = true;
    for (Mask r = m; r != 0 && ok; r &= r - 1) ok = minimal[std::countr_zero(r)].subset_of(a);
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace

std::string describe(const TopologyViolation& v, const GroundSet& ground) {
  switch (v.kind) {
    case TopologyViolation::Kind::missing_empty:
      return "empty set is not open";
    case TopologyViolation::Kind::missing_universe:
      return "whole space is not open";
    case TopologyViolation::Kind::union_not_closed:
      return "union of " + ground.format(v.first) + " and " + ground.format(v.second) + " is not open";
    case TopologyViolation::Kind::intersection_not_closed:
      return "intersection of " + ground.format(v.first) + " and " + ground.format(v.second) +
             " is not open";
  }
  return "unknown violation";
}

std::optional<TopologyViolation> find_topology_violation(const GroundSet& ground, const Family& family) {
  using Kind = TopologyViolation::Kind;
  const Subset x = ground.universe();
  for (Subset s : family) {
    if (!s.subset_of(x)) throw SchemaError("family member " + std::to_string(s.bits()) + " lies outside the ground set");
  }
  if (!family.contains(Subset{})) return TopologyViolation{Kind::missing_empty, {}, {}};
  if (!family.contains(x)) return TopologyViolation{Kind::missing_universe, x, {}};

  // A family is a topology iff it equals the up-closed sets of its own
  // minimal neighbourhoods; it is always contained in them.
  const auto minimal = minimal_neighbourhoods(ground.size(), family);
  if (up_closed_sets(ground.size(), minimal).size() == family.size()) return std::nullopt;

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family.contains(family[i] & family[j])) {
        return TopologyViolation{Kind::intersection_not_closed, family[i], family[j]};
      }
      if (!family.contains(family[i] | family[j])) {
        return TopologyViolation{Kind::union_not_closed, family[i], family[j]};
      }
    }
  }
  return std::nullopt;  // unreachable: the size test already failed
}

bool is_topology(const GroundSet& ground, const Family& family) {
  return !find_topology_violation(ground, family).has_value();
}

Topology::Topology() : Topology(Trusted{}, GroundSet{}, Family{Subset{}}) {}

Topology::Topology(GroundSet ground, Family opens) {
  if (auto v = find_topology_violation(ground, opens)) {
    throw SchemaError("not a topology: " + describe(*v, ground));
  }
  auto minimal = minimal_neighbourhoods(ground.size(), opens);
  impl_ = std::make_shared<const Impl>(Impl{std::move(ground), std::move(opens), std::move(minimal)});
}

Topology::Topology(Trusted, GroundSet ground, Family opens) {
  auto minimal = minimal_neighbourhoods(ground.size(), opens);
  impl_ = std::make_shared<const Impl>(Impl{std::move(ground), std::move(opens), std::move(minimal)});
}

Subset Topology::interior(Subset a) const {
  Subset out;
  for (int p = 0; p < size(); ++p) {
    if (impl_->minimal[p].subset_of(a)) out |= Subset::singleton(p);
  }
  return out;
}

Subset Topology::closure(Subset a) const {
  Subset out;
  for (int p = 0; p < size(); ++p) {
    if (impl_->minimal[p].intersects(a)) out |= Subset::singleton(p);
  }
  return out;
}

Topology topology_from_minimal(const GroundSet& ground, std::vector<Subset> minimal) {
  Family opens(up_closed_sets(ground.size(), minimal));
  return Topology(Topology::Trusted{}, ground, std::move(opens));
}

Topology build_topology(const GroundSet& ground, const Family& subbasis) {
  const Subset x = ground.universe();
  std::vector<Subset> minimal(ground.size(), x);
  for (Subset s : subbasis) {
    if (!s.subset_of(x)) throw UsageError("subbasis member lies outside the ground set");
    for_each_point(s, [&](int p) { minimal[p] &= s; });
  }
  return topology_from_minimal(ground, std::move(minimal));
}

void for_each_topology(int n, const std::function<void(const Topology&)>& visit) {
  if (n < 0 || n > kMaxExhaustivePoints) {
    throw UsageError("exhaustive enumeration supports n <= 4; use random_topology for larger spaces");
  }
  const GroundSet ground = GroundSet::numbered(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::vector<Subset> members;
  for (std::uint64_t f = 0; f < families; ++f) {
    members.clear();
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if ((f >> s) & 1U) members.emplace_back(static_cast<Mask>(s));
    }
    Family family(members);
    if (is_topology(ground, family)) visit(Topology(ground, std::move(family)));
  }
}

std::vector<Topology> enumerate_topologies(int n) {
  std::vector<Topology> out;
  for_each_topology(n, [&](const Topology& t) { out.push_back(t); });
  return out;
}

Topology random_topology(int n, std::uint64_t seed, int subbasis_size) {
  if (n < 0 || n > kMaxPoints) throw UsageError("random_topology supports 0 <= n <= 16");
  if (subbasis_size < 0) throw UsageError("subbasis size must be non-negative");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  const Subset x = Subset::full(n);
  std::vector<Subset> subbasis;
  for (int i = 0; i < subbasis_size; ++i) subbasis.push_back(Subset(static_cast<Mask>(rng())) & x);
  return build_topology(GroundSet::numbered(n), Family(std::move(subbasis)));
}

namespace fixtures {

Topology sierpinski() {
  return Topology(GroundSet::numbered(2), Family{Subset(0b00), Subset(0b01), Subset(0b11)});
}

Topology chain3() {
  return Topology(GroundSet({"a", "b", "c"}), Family{Subset(0b000), Subset(0b001), Subset(0b011), Subset(0b111)});
}

Topology discrete(int n) { return Topology(GroundSet::numbered(n), all_subsets(n)); }

Topology indiscrete(int n) {
  return Topology(GroundSet::numbered(n), Family{Subset{}, Subset::full(n)});
}

}  // namespace fixtures

}  // namespace topolab
