#include "topolab/compact.hpp"

#include <algorithm>
#include <random>

namespace topolab {

CoverSystem::CoverSystem(Family ambient, Operation enlarger)
    : ambient_(std::move(ambient)), enlarger_(std::move(enlarger)) {
  const Subset x = universe();
  if (!ambient_.contains(x)) throw UsageError("ambient family must contain the whole space");
  for (Subset s : ambient_) {
    if (!s.subset_of(x)) throw UsageError("ambient family member lies outside the space");
  }
}

bool is_cover(const Family& cover, Subset a) { return a.subset_of(cover.join()); }

CompactnessVerdict is_compact(const CoverSystem& cs, Subset a) {
  const Operation& phi = cs.enlarger();
  CompactnessVerdict v;
  for (int point = 0; point < cs.universe().count() && v.compact; ++point) {
    if (!a.contains(point)) continue;
    std::vector<Subset> avoiding;
    for (Subset u : cs.ambient()) {
      if (!phi(u).contains(point) && u.intersects(a)) avoiding.push_back(u);
    }
    Subset covered;
    for (Subset u : avoiding) covered |= u;
    if (!a.subset_of(covered)) continue;

    // Drop redundant members, lowest bitmask first.
    for (std::size_t i = 0; i < avoiding.size();) {
      Subset rest;
      for (std::size_t j = 0; j < avoiding.size(); ++j) {
        if (j != i) rest |= avoiding[j];
      }
      if (a.subset_of(rest)) {
        avoiding.erase(avoiding.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    v.compact = false;
    v.witness_point = point;
    v.witness_cover = Family(std::move(avoiding));
  }
  return v;
}

bool brute_force_compact(const CoverSystem& cs, Subset a) {
  const auto members = cs.ambient().members();
  const std::size_t m = members.size();
  if (m > kBruteForceMaxAmbient) {
    throw UsageError("brute-force compactness is capped at 20 ambient members");
  }
  const std::size_t count = std::size_t{1} << m;
  std::vector<Subset> plain(count), enlarged(count);
  for (std::size_t s = 1; s < count; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    plain[s] = plain[s & (s - 1)] | members[low];
    enlarged[s] = enlarged[s & (s - 1)] | cs.enlarger()(members[low]);
  }
  for (std::size_t cover = 0; cover < count; ++cover) {
    if (!a.subset_of(plain[cover])) continue;
    bool found = false;
    for (std::size_t sub = cover;; sub = (sub - 1) & cover) {
      if (a.subset_of(enlarged[sub])) {
        found = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!found) return false;
  }
  return true;
}

CoverSystem cover_system(const OpPair& p, CompactnessKind kind) {
  switch (kind) {
    case CompactnessKind::phi12:
      return CoverSystem(p.phi1_open(), p.phi2());
    case CompactnessKind::phi12_open:
      return CoverSystem(phi12_open_family(p), builtin(p.topology(), OperationName::identity));
    case CompactnessKind::base: {
      const Family eb = enlargement_base(p);
      std::vector<Subset> base(eb.begin(), eb.end());
      base.push_back(p.universe());
      return CoverSystem(Family(std::move(base)), builtin(p.topology(), OperationName::identity));
    }
  }
  throw UsageError("unknown compactness kind");
}

bool compactness_kind(const OpPair& p, Subset a, CompactnessKind kind) {
  return is_compact(cover_system(p, kind), a).compact;
}

std::pair<OperationName, OperationName> set_class_pair(SetClass c) {
  using O = OperationName;
  switch (c) {
    case SetClass::H: return {O::interior, O::closure};
    case SetClass::N: return {O::interior, O::introcl};
    case SetClass::s: return {O::cloint, O::scl};
    case SetClass::S: return {O::cloint, O::closure};
    case SetClass::compact: return {O::interior, O::identity};
  }
  throw UsageError("unknown set class");
}

bool named_set_class(const Topology& t, Subset a, SetClass c) {
  const auto [first, second] = set_class_pair(c);
  return compactness_kind(OpPair::of(t, first, second), a, CompactnessKind::phi12);
}

// ---------------------------------------------------------------------------

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

Subset random_nonempty(std::mt19937_64& rng, Subset universe) {
  if (universe.empty()) return {};
  Subset s;
  do {
    s = Subset(static_cast<Mask>(rng())) & universe;
  } while (s.empty());
  return s;
}

bool is_antichain(const Family& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && f[i].subset_of(f[j])) return false;
    }
  }
  return true;
}

// Intersections of every subfamily of `items`, visited from the full
// subfamily downwards; stops as soon as `visit` returns true.
template <class Visit>
bool any_submeet(std::span<const Subset> items, Subset universe, Visit&& visit) {
  const std::size_t k = items.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  for (std::size_t sub = full;; sub = (sub - 1) & full) {
    Subset meet = universe;
    for (std::size_t r = sub; r != 0; r &= r - 1) meet &= items[static_cast<std::size_t>(std::countr_zero(r))];
    if (visit(meet)) return true;
    if (sub == 0) break;
  }
  return false;
}

Subset meet_of(std::span<const Subset> items, Subset universe) {
  Subset out = universe;
  for (Subset s : items) out &= s;
  return out;
}

std::vector<Subset> image(const Family& f, const auto& map) {
  std::vector<Subset> out;
  out.reserve(f.size());
  for (Subset s : f) out.push_back(map(s));
  return out;
}

bool meets_every_member(const Family& base, Subset a) {
  return std::all_of(base.begin(), base.end(), [&](Subset s) { return s.intersects(a); });
}

bool all_inside(const Family& base, Subset a) {
  return std::all_of(base.begin(), base.end(), [&](Subset s) { return s.subset_of(a); });
}

// Some point of `a` to which the base accumulates / converges.
bool accumulates_in(const Family& base, const OpPair& p, Subset a) {
  bool found = false;
  for_each_point(a, [&](int x) { found = found || base_accumulates(base, p, x); });
  return found;
}

bool converges_in(const Family& base, const OpPair& p, Subset a) {
  bool found = false;
  for_each_point(a, [&](int x) { found = found || base_converges(base, p, x); });
  return found;
}

bool generates_maximal(const Family& base) { return base.meet(base.join()).count() == 1; }

// For every W in `families`: if every subfamily W' meets A then so does W.
bool fip_statement(const std::vector<Family>& families, Subset a, Subset x) {
  for (const Family& w : families) {
    const bool every_finite_meets =
        !any_submeet(w.members(), x, [&](Subset m) { return !m.intersects(a); });
    if (every_finite_meets && !meet_of(w.members(), x).intersects(a)) return false;
  }
  return true;
}

// For every W in `families`: if W misses A then some subfamily W' misses A.
bool finite_miss_statement(const std::vector<Family>& families, Subset a, Subset x) {
  for (const Family& w : families) {
    if (meet_of(w.members(), x).intersects(a)) continue;
    if (!any_submeet(w.members(), x, [&](Subset m) { return !m.intersects(a); })) return false;
  }
  return true;
}

}  // namespace

std::vector<Family> all_nonempty_families(int n) {
  if (n > 3) throw UsageError("all_nonempty_families is limited to n <= 3");
  const std::size_t nonempty = (std::size_t{1} << n) - 1;
  std::vector<Family> out;
  for (std::size_t f = 0; f < (std::size_t{1} << nonempty); ++f) {
    std::vector<Subset> members;
    for (std::size_t s = 0; s < nonempty; ++s) {
      if ((f >> s) & 1U) members.emplace_back(static_cast<Mask>(s + 1));
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

QuantifiedFamilies make_quantified_families(int n, const QuantifierPolicy& policy) {
  QuantifiedFamilies q;
  q.policy = policy;
  q.exhaustive = n <= std::min(policy.exhaustive_max_points, 3);
  const Subset x = Subset::full(n);
  if (q.exhaustive) {
    for (Family& f : all_nonempty_families(n)) {
      if (is_filterbase(f)) q.filterbases.push_back(f);
      if (is_antichain(f)) q.nonempty_families.push_back(std::move(f));
    }
    return q;
  }
  for (Mask c = 1; c <= x.bits(); ++c) {
    q.filterbases.push_back(Family{Subset(c)});
    q.nonempty_families.push_back(Family{Subset(c)});
  }
  auto rng = make_rng(policy.seed, static_cast<std::uint64_t>(n));
  for (int i = 0; i < policy.random_families; ++i) {
    // Supersets of a random core always form a filterbase.
    const Subset core = random_nonempty(rng, x);
    std::vector<Subset> base{core};
    const int extra = static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) base.push_back(core | (Subset(static_cast<Mask>(rng())) & x));
    q.filterbases.emplace_back(std::move(base));

    std::vector<Subset> fam;
    const int size = static_cast<int>(rng() % 6);
    for (int k = 0; k < size; ++k) fam.push_back(random_nonempty(rng, x));
    q.nonempty_families.emplace_back(std::move(fam));
  }
  return q;
}

std::vector<Family> subfamilies(const Family& f, std::uint64_t seed, int samples) {
  std::vector<Family> out;
  if (f.size() <= 10) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << f.size()); ++mask) {
      std::vector<Subset> members;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if ((mask >> i) & 1U) members.push_back(f[i]);
      }
      out.emplace_back(std::move(members));
    }
    return out;
  }
  auto rng = make_rng(seed, f.size());
  out.emplace_back();
  for (Subset s : f) out.push_back(Family{s});
  for (int i = 0; i < samples; ++i) {
    std::vector<Subset> members;
    const std::size_t size = rng() % 11;
    for (std::size_t k = 0; k < size; ++k) members.push_back(f[rng() % f.size()]);
    out.emplace_back(std::move(members));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Sampled universes may miss the family that refutes a statement; the
// transformed witness cover of a non-compact set is the canonical candidate.
template <typename Transform>
std::optional<Family> cover_complements(const OpPair& p, Subset a, Transform transform) {
  const CompactnessVerdict v = is_compact(cover_system(p, CompactnessKind::phi12), a);
  if (v.compact) return std::nullopt;
  std::vector<Subset> out;
  for (Subset u : *v.witness_cover) out.push_back(transform(u));
  return Family(std::move(out));
}

}  // namespace

CharacterizationResult characterize_compactness(const OpPair& p, Subset a, const QuantifiedFamilies& q) {
  const Subset x = p.universe();
  CharacterizationResult r;
  auto& st = r.statements;

  st[0] = {"cover", compactness_kind(p, a, CompactnessKind::phi12)};

  bool meets = true, maximal_meets = true, inside = true, maximal_inside = true, closure_miss = true;
  for (const Family& base : q.filterbases) {
    const bool maximal = generates_maximal(base);
    if (meets_every_member(base, a)) {
      if (!accumulates_in(base, p, a)) meets = false;
      if (maximal && !converges_in(base, p, a)) maximal_meets = false;
    }
    if (all_inside(base, a)) {
      if (!accumulates_in(base, p, a)) inside = false;
      if (maximal && !converges_in(base, p, a)) maximal_inside = false;
    }
    const auto closures = image(base, [&](Subset s) { return p.closure(s); });
    if (!meet_of(closures, x).intersects(a) &&
        std::none_of(base.begin(), base.end(), [&](Subset s) { return !s.intersects(a); })) {
      closure_miss = false;
    }
  }
  st[1] = {"filterbase_meets", meets};
  st[2] = {"maximal_meets", maximal_meets};
  st[3] = {"filterbase_inside", inside};
  st[4] = {"maximal_inside", maximal_inside};

  bool finite = true, fip = true;
  for (const Family& w : q.nonempty_families) {
    const Subset closed_meet = meet_of(image(w, [&](Subset s) { return p.closure(s); }), x);
    const bool some_sub_misses = any_submeet(w.members(), x, [&](Subset m) { return !m.intersects(a); });
    if (!closed_meet.intersects(a) && !some_sub_misses) finite = false;
    if (!some_sub_misses && !closed_meet.intersects(a)) fip = false;
  }
  st[5] = {"closure_family_finite", finite};
  st[6] = {"closure_family_fip", fip};
  st[7] = {"filterbase_closure_miss", closure_miss};

  st[8] = {"closed_family_dual", std::nullopt};
  st[9] = {"closed_family_dual_fip", std::nullopt};
  try {
    const Operation d = dual(p.phi2());
    const Family closed = phi_closed_family(p.phi1());
    bool dual_finite = true, dual_fip = true;
    auto candidates = subfamilies(closed, q.policy.seed, q.policy.random_families);
    if (!q.exhaustive) {
      if (auto w = cover_complements(p, a, [&](Subset u) { return x - u; })) candidates.push_back(*w);
    }
    for (const Family& phi : candidates) {
      const auto duals = image(phi, [&](Subset s) { return d(s); });
      const bool plain_misses = !meet_of(phi.members(), x).intersects(a);
      const bool some_dual_misses = any_submeet(duals, x, [&](Subset m) { return !m.intersects(a); });
      if (plain_misses && !some_dual_misses) dual_finite = false;
      if (!some_dual_misses && plain_misses) dual_fip = false;
    }
    st[8].value = dual_finite;
    st[9].value = dual_fip;
  } catch (const SchemaError&) {
    // dual is not an operation; the dual statements do not apply
  }
  return r;
}

bool base_suite_hypothesis(const OpPair& p) {
  const BaseTheoremCheck c = check_base_theorem(p);
  return c.dominates && c.images_stable;
}

BaseSuiteResult base_compactness_suite(const OpPair& p, Subset a, const QuantifierPolicy& policy) {
  const Subset x = p.universe();
  BaseSuiteResult r;
  r.hypothesis = base_suite_hypothesis(p);
  auto& st = r.statements;
  st[0] = {"phi12_compact", compactness_kind(p, a, CompactnessKind::phi12)};
  st[1] = {"base_compact", compactness_kind(p, a, CompactnessKind::base)};
  st[2] = {"phi12_open_compact", compactness_kind(p, a, CompactnessKind::phi12_open)};

  const Family enlarged_complements = enlargement_base(p).complements(x);
  const Family open_complements = phi12_open_family(p).complements(x);
  const auto enlarged_subs = subfamilies(enlarged_complements, policy.seed, policy.random_families);
  const auto open_subs = subfamilies(open_complements, policy.seed + 1, policy.random_families);
  st[3] = {"enlarged_complements_fip", fip_statement(enlarged_subs, a, x)};
  st[4] = {"enlarged_complements_finite", finite_miss_statement(enlarged_subs, a, x)};
  st[5] = {"open_complements_fip", fip_statement(open_subs, a, x)};
  st[6] = {"open_complements_finite", finite_miss_statement(open_subs, a, x)};
  return r;
}

SpaceSuiteResult space_compactness_suite(const OpPair& p) {
  const Subset x = p.universe();
  SpaceSuiteResult r;
  r.hypothesis = base_suite_hypothesis(p);
  auto& st = r.statements;

  const CoverSystem phi12 = cover_system(p, CompactnessKind::phi12);
  const CoverSystem open12 = cover_system(p, CompactnessKind::phi12_open);
  const CoverSystem base = cover_system(p, CompactnessKind::base);
  auto all_compact = [](const CoverSystem& cs, const std::vector<Subset>& sets) {
    return std::all_of(sets.begin(), sets.end(), [&](Subset s) { return is_compact(cs, s).compact; });
  };

  std::vector<Subset> complements;
  for (Subset u : p.phi1_open()) complements.push_back(x - p.phi2()(u));
  const Family closed = phi12_closed_family(p);
  const std::vector<Subset> closed_sets(closed.begin(), closed.end());

  st[0] = {"space_phi12", is_compact(phi12, x).compact};
  st[1] = {"space_base", is_compact(base, x).compact};
  st[2] = {"space_phi12_open", is_compact(open12, x).compact};
  st[3] = {"complements_phi12", all_compact(phi12, complements)};
  st[4] = {"complements_phi12_open", all_compact(open12, complements)};
  st[5] = {"complements_base", all_compact(base, complements)};
  st[6] = {"closed_sets_phi12", all_compact(phi12, closed_sets)};
  st[7] = {"closed_sets_phi12_open", all_compact(open12, closed_sets)};
  st[8] = {"closed_sets_base", all_compact(base, closed_sets)};
  return r;
}

bool additive_suite_hypothesis(const OpPair& p) {
  if (!is_monotone(p.phi1())) return false;
  const Family& open = p.phi1_open();
  for (std::size_t i = 0; i < open.size(); ++i) {
    for (std::size_t j = i + 1; j < open.size(); ++j) {
      if (p.phi2()(open[i] | open[j]) != (p.phi2()(open[i]) | p.phi2()(open[j]))) return false;
    }
  }
  return true;
}

AdditiveSuiteResult additive_compactness_suite(const OpPair& p, Subset a, const QuantifierPolicy& policy) {
  const Subset x = p.universe();
  AdditiveSuiteResult r;
  r.hypothesis = additive_suite_hypothesis(p);
  r.statements[0] = {"phi12_compact", compactness_kind(p, a, CompactnessKind::phi12)};

  const Family complements = enlargement_base(p).complements(x);
  bool accumulate = true;
  auto candidates = subfamilies(complements, policy.seed, policy.random_families);
  if (complements.size() > 10) {
    if (auto w = cover_complements(p, a, [&](Subset u) { return x - p.phi2()(u); })) candidates.push_back(*w);
  }
  for (const Family& base : candidates) {
    if (!is_filterbase(base) || !meets_every_member(base, a)) continue;
    if (!accumulates_in(base, p, a)) {
      accumulate = false;
      break;
    }
  }
  r.statements[1] = {"complement_filterbases_accumulate", accumulate};
  return r;
}

ClosedSpacePredicates closed_space_predicates(const Topology& t, const OpPair& p) {
  using O = OperationName;
  ClosedSpacePredicates c;
  const Subset x = t.universe();
  c.phi12_compact_space = compactness_kind(p, x, CompactnessKind::phi12);
  c.hausdorff = is_t2(OpPair::of(t, O::interior, O::identity));
  c.s_closed = c.hausdorff && compactness_kind(OpPair::of(t, O::cloint, O::closure), x, CompactnessKind::phi12);
  c.h_closed = c.hausdorff && compactness_kind(OpPair::of(t, O::interior, O::closure), x, CompactnessKind::phi12);
  return c;
}

}  // namespace topolab
