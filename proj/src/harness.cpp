#include "topolab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <span>
#include <thread>

namespace topolab {

std::vector<PairSpec> catalog_pairs() {
  std::vector<PairSpec> out;
  for (OperationName a : kCatalog) {
    for (OperationName b : kCatalog) out.emplace_back(a, b);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "operation_catalog",        "open_family_inclusion",   "phi12_structure",
      "named_families",           "base_theorem",            "filter_convergence",
      "t2_uniqueness",            "neighborhood_filterbases", "filter_closure",
      "cover_oracle",             "compactness_monotonicity", "compactness_characterizations",
      "base_compactness",         "compactness_transfer",    "additive_compactness",
      "set_class_chain",
  };
  return names;
}

std::size_t Report::total_failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures.size();
  return n;
}

const SuiteReport* Report::find(std::string_view suite) const {
  for (const auto& s : suites) {
    if (s.name == suite) return &s;
  }
  return nullptr;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

std::string pair_label(const PairSpec& p) {
  return std::string(to_string(p.first)) + "," + std::string(to_string(p.second));
}

std::string family_text(const GroundSet& g, const Family& f) {
  std::string out;
  for (Subset s : f) {
    if (!out.empty()) out += ' ';
    out += g.format(s);
  }
  return out;
}

// First member of the symmetric difference, for mismatch reports.
std::string family_difference(const GroundSet& g, const Family& a, const Family& b) {
  for (Subset s : a) {
    if (!b.contains(s)) return "only in first: " + g.format(s);
  }
  for (Subset s : b) {
    if (!a.contains(s)) return "only in second: " + g.format(s);
  }
  return {};
}

// ---------------------------------------------------------------------------

struct SpaceContext {
  const SweepSpace& space;
  const SuiteConfig& cfg;
  Topology t;
  Subset x;
  std::vector<Operation> ops;  // indexed by OperationName
  std::vector<PairSpec> specs;
  std::vector<OpPair> pairs;
  std::vector<Family> open12;
  std::vector<char> regular;    // φ2 regular w.r.t. φ1O
  std::vector<char> inclusion;  // φ1O ⊂ φ2O
  std::vector<Subset> subsets;  // quantified subsets, ascending
  std::vector<Subset> cores;    // nonempty quantified subsets
  QuantifierPolicy policy;
  QuantifiedFamilies families;
  bool all_subsets = true;

  SpaceContext(const SweepSpace& s, const SuiteConfig& c, std::uint64_t seed)
      : space(s), cfg(c), t(s.topology), x(s.topology.universe()) {
    for (OperationName n : kCatalog) ops.push_back(builtin(t, n));
    specs = cfg.pairs;
    for (const auto& [a, b] : specs) {
      pairs.emplace_back(op(a), op(b));
      const OpPair& p = pairs.back();
      open12.push_back(phi12_open_family(p));
      regular.push_back(is_regular_wrt(p.phi2(), p.phi1_open()));
      inclusion.push_back(p.phi1_open().subfamily_of(phi_open_family(p.phi2())));
    }

    const int n = t.size();
    all_subsets = n <= kMaxExhaustivePoints;
    if (all_subsets) {
      for (Mask m = 0; m <= x.bits(); ++m) subsets.emplace_back(m);
    } else {
      std::mt19937_64 rng(splitmix64(seed ^ 0x5b5eULL));
      std::set<Subset> picked{Subset{}, x};
      for (int i = 0; i < cfg.subset_samples; ++i) picked.insert(Subset(static_cast<Mask>(rng())) & x);
      subsets.assign(picked.begin(), picked.end());
    }
    for (Subset s : subsets) {
      if (!s.empty()) cores.push_back(s);
    }
    policy.exhaustive_max_points = 3;
    policy.random_families = cfg.random_families;
    policy.seed = splitmix64(seed ^ 0xfa3117ULL);
    families = make_quantified_families(n, policy);
  }

  const Operation& op(OperationName n) const { return ops[static_cast<std::size_t>(n)]; }
  const GroundSet& ground() const { return t.ground(); }
  std::string fmt(Subset s) const { return ground().format(s); }
};

class Recorder {
 public:
  Recorder(SuiteReport& report, const SpaceContext& ctx) : report_(report), ctx_(ctx) {}

  // One evaluated instance. Only asserted instances can fail.
  void check(bool asserted, bool holds, std::string pair, std::string subject,
             std::vector<std::string> statements, std::string witness = {}) {
    ++report_.instances_checked;
    if (!asserted) return;
    ++report_.hypothesis_held;
    if (holds) return;
    report_.failures.push_back(Failure{ctx_.space.id, std::move(pair), std::move(subject),
                                       std::move(statements), std::move(witness)});
  }

  void require(bool holds, std::string pair, std::string subject, std::vector<std::string> statements,
               std::string witness = {}) {
    check(true, holds, std::move(pair), std::move(subject), std::move(statements), std::move(witness));
  }

 private:
  SuiteReport& report_;
  const SpaceContext& ctx_;
};

// ---------------------------------------------------------------------------
// Suites

void suite_operation_catalog(const SpaceContext& c, Recorder& r) {
  using O = OperationName;
  for (OperationName n : kCatalog) {
    const Operation& f = c.op(n);
    const std::string name(to_string(n));
    r.require(is_operation(c.t, f.table()), name, "", {"is_operation"});
    r.require(dual(dual(f)) == f, name, "", {"dual_involution"});
    const Family open = phi_open_family(f);
    r.require(c.t.opens().subfamily_of(open), name, "", {"topology_in_open_family"},
              family_difference(c.ground(), c.t.opens(), open));
    const Family closed = phi_closed_family(f);
    r.require(open.contains(Subset{}) && open.contains(c.x) && closed.contains(Subset{}) && closed.contains(c.x),
              name, "", {"empty_and_space_open_and_closed"});
    const bool monotone = is_monotone(f);
    r.check(monotone, is_union_closed(open), name, "", {"monotone_open_family_supratopology"});
  }

  const std::pair<O, O> duals[] = {{O::interior, O::closure}, {O::cloint, O::introcl}, {O::scl, O::sint}};
  for (const auto& [a, b] : duals) {
    const std::string label = std::string(to_string(a)) + "," + std::string(to_string(b));
    r.require(dual(c.op(a)) == c.op(b) && dual(c.op(b)) == c.op(a), label, "", {"dual_pair"});
  }

  const std::vector<std::vector<O>> chains = {
      {O::interior, O::cloint, O::closure},
      {O::interior, O::identity, O::scl, O::closure},
      {O::interior, O::introcl, O::scl},
  };
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const std::string label = std::string(to_string(chain[i])) + "<=" + std::string(to_string(chain[i + 1]));
      r.require(leq(c.op(chain[i]), c.op(chain[i + 1])), label, "", {"catalog_chain"});
    }
  }

  for (OperationName a : kCatalog) {
    for (OperationName b : kCatalog) {
      const bool ab = leq(c.op(a), c.op(b));
      const bool ba = leq(c.op(b), c.op(a));
      const std::string label = std::string(to_string(a)) + "," + std::string(to_string(b));
      r.check(ab && ba, c.op(a).table().size() == c.op(b).table().size() &&
                            std::equal(c.op(a).table().begin(), c.op(a).table().end(), c.op(b).table().begin()),
              label, "", {"leq_antisymmetric"});
      for (OperationName d : kCatalog) {
        r.check(ab && leq(c.op(b), c.op(d)), leq(c.op(a), c.op(d)),
                label + "," + std::string(to_string(d)), "", {"leq_transitive"});
      }
    }
  }
  r.require(is_monotone(c.op(O::scl)), "scl", "", {"scl_monotone"});
  for (OperationName n : {O::cloint, O::closure, O::scl, O::identity, O::introcl}) {
    r.require(is_regular_wrt(c.op(n), c.t.opens()), std::string(to_string(n)), "", {"regular_wrt_topology"});
  }
}

void suite_open_family_inclusion(const SpaceContext& c, Recorder& r) {
  const Operation& id = c.op(OperationName::identity);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const bool hyp = leq(p.phi1(), p.phi2()) || leq(id, p.phi2());
    r.check(hyp, c.inclusion[i] != 0, pair_label(c.specs[i]), "", {"phi1_open_in_phi2_open"});
  }
}

void suite_phi12_structure(const SpaceContext& c, Recorder& r) {
  const Operation& id = c.op(OperationName::identity);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const std::string label = pair_label(c.specs[i]);
    const StructureReport s = classify_structure(p);
    const bool regular = c.regular[i] != 0;
    const bool dominated = leq(id, p.phi2()) || leq(p.phi1(), p.phi2());
    const bool incl = c.inclusion[i] != 0;

    r.require(s.is_supratopology, label, "", {"supratopology"});
    r.check(regular, s.is_topology && s.closed_iff_cl_subset, label, "", {"regular_topology", "closed_iff_cl_subset"});
    r.check(regular && dominated, s.is_topology && s.closed_iff_cl_equal, label, "",
            {"regular_dominated_topology", "closed_iff_cl_equal"});
    r.require(!s.is_kuratowski || s.is_topology, label, "", {"kuratowski_implies_topology"});

    // Closure-defined topology, checked under both closed-set readings.
    r.check(regular && incl, s.is_topology && s.closed_iff_cl_subset, label, "", {"closure_topology_subset_reading"});
    r.check(regular && incl, s.is_topology && s.closed_iff_cl_equal, label, "", {"closure_topology_equal_reading"});
    const Family& open = c.open12[i];
    const bool base_open = enlargement_base(p).subfamily_of(open);
    for (Subset a : c.subsets) {
      const Subset cl = p.closure(a);
      const Subset top_cl = closure_in(open, a, c.x);
      r.check(regular && incl && s.is_topology, a.subset_of(cl) && cl.subset_of(top_cl), label, "A=" + c.fmt(a),
              {"extensive_below_topological_closure"});
      r.check(regular && incl && base_open, cl == top_cl, label, "A=" + c.fmt(a), {"equals_topological_closure"});
    }
    r.check(regular && incl && base_open, s.is_kuratowski, label, "", {"kuratowski"});

    for (Subset a : c.subsets) {
      const std::string subject = "A=" + c.fmt(a);
      r.require(p.closure(a) == phi12_cl_pointwise(p, a), label, subject, {"closure_pointwise_matches_dual"});
      r.require((c.x - p.interior(a)) == phi12_cl_pointwise(p, c.x - a), label, subject, {"interior_closure_duality"});
      bool monotone = true;
      for (int q = 0; q < c.t.size(); ++q) {
        if (!p.interior(a).subset_of(p.interior(a | Subset::singleton(q)))) monotone = false;
      }
      r.require(monotone, label, subject, {"interior_monotone"});
    }

    if (c.specs[i].second == OperationName::identity) {
      const bool hyp = is_monotone(p.phi1());
      r.check(hyp, open == p.phi1_open() && phi12_closed_family(p) == phi_closed_family(p.phi1()), label, "",
              {"identity_enlarger_keeps_phi1_open"}, family_difference(c.ground(), open, p.phi1_open()));
    }
    const bool phi1_topology = is_union_closed(p.phi1_open()) && is_intersection_closed(p.phi1_open());
    r.check(phi1_topology && is_monotone(p.phi2()), regular, label, "", {"monotone_enlarger_regular_on_topology"});
  }
}

void suite_named_families(const SpaceContext& c, Recorder& r) {
  using O = OperationName;
  using N = NamedFamily;
  const Topology& t = c.t;
  const GroundSet& g = c.ground();
  auto same = [&](const Family& a, const Family& b, const std::string& what, const std::string& pair) {
    r.require(a == b, pair, "", {what}, family_difference(g, a, b));
  };
  auto pair = [&](O a, O b) { return OpPair::of(t, a, b); };

  same(phi_open_family(c.op(O::interior)), t.opens(), "int_open_is_topology", "int");
  same(phi_open_family(c.op(O::cloint)), named_family(t, N::SO), "cloint_open_is_SO", "cloint");
  same(phi_open_family(c.op(O::introcl)), named_family(t, N::PO), "introcl_open_is_PO", "introcl");
  for (O n : {O::closure, O::identity, O::scl}) {
    same(phi_open_family(c.op(n)), all_subsets(t.size()), "open_family_is_powerset", std::string(to_string(n)));
  }

  same(phi12_open_family(pair(O::interior, O::closure)), named_family(t, N::tau_theta), "tau_theta", "int,cl");
  same(phi12_open_family(pair(O::cloint, O::scl)), named_family(t, N::SthetaO), "SthetaO", "cloint,scl");
  same(phi12_closed_family(pair(O::cloint, O::scl)), named_family(t, N::SthetaC), "SthetaC", "cloint,scl");
  same(phi12_open_family(pair(O::interior, O::introcl)), named_family(t, N::tau_s), "tau_s", "int,introcl");
  same(phi12_open_family(pair(O::cloint, O::closure)), named_family(t, N::thetaSO), "thetaSO", "cloint,cl");
  same(phi12_closed_family(pair(O::cloint, O::closure)), named_family(t, N::thetaSC), "thetaSC", "cloint,cl");
  same(phi12_open_family(pair(O::interior, O::scl)), phi12_open_family(pair(O::interior, O::introcl)),
       "scl_and_introcl_agree_on_open_sets", "int,scl|int,introcl");

  const Family ro = named_family(t, N::RO);
  const Family rc = named_family(t, N::RC);
  const Family sr = named_family(t, N::SR);
  const Family tau_s = named_family(t, N::tau_s);
  r.require(is_topology(g, tau_s) && is_base_for(ro, tau_s), "", "", {"RO_base_for_tau_s"});
  same(enlargement_base(pair(O::interior, O::introcl)), ro, "base_is_RO", "int,introcl");
  same(enlargement_base(pair(O::interior, O::introcl)).complements(c.x), rc, "complement_base_is_RC", "int,introcl");
  same(enlargement_base(pair(O::cloint, O::closure)), rc, "base_is_RC", "cloint,cl");
  same(enlargement_base(pair(O::cloint, O::closure)).complements(c.x), ro, "complement_base_is_RO", "cloint,cl");
  same(enlargement_base(pair(O::cloint, O::scl)), sr, "base_is_SR", "cloint,scl");
  same(enlargement_base(pair(O::cloint, O::scl)).complements(c.x), sr, "complement_base_is_SR", "cloint,scl");
  same(enlargement_base(pair(O::interior, O::closure)).complements(c.x), ro, "complement_base_is_RO", "int,cl");
  {
    std::vector<Subset> interiors, dual_images;
    const Operation interior_op = dual(c.op(O::closure));
    for (Subset k : named_family(t, N::SC)) interiors.push_back(t.interior(k));
    for (Subset u : phi_open_family(c.op(O::cloint))) dual_images.push_back(interior_op(c.x - u));
    same(Family(interiors), ro, "interiors_of_semi_closed_are_RO", "cloint,cl");
    same(Family(dual_images), ro, "dual_images_are_RO", "cloint,cl");
  }

  // Closures of open sets coincide with θ-closure and τs-closure.
  const OpPair theta = pair(O::interior, O::closure);
  for (Subset u : t.opens()) {
    const Subset cl = t.closure(u);
    r.require(cl == theta.closure(u) && cl == closure_in(tau_s, u, c.x), "int,cl", "U=" + c.fmt(u),
              {"open_set_closures_agree"});
  }

  // Closed semi-open neighbourhoods match closed open neighbourhoods.
  const Family so = named_family(t, N::SO);
  for (int p = 0; p < t.size(); ++p) {
    std::vector<Subset> from_open, from_semi;
    for (Subset v : t.opens()) {
      if (t.closure(v).contains(p)) from_open.push_back(t.closure(v));
    }
    for (Subset u : so) {
      if (u.contains(p)) from_semi.push_back(t.closure(u));
    }
    same(Family(from_open), Family(from_semi), "semi_open_closures_match", "cloint,cl");
  }
}

void suite_base_theorem(const SpaceContext& c, Recorder& r) {
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const BaseTheoremCheck b = check_base_theorem(c.pairs[i]);
    const std::string label = pair_label(c.specs[i]);
    r.check(b.hypothesis_stable(), b.base_in_both_families, label, "", {"stable_images_in_both_families"});
    r.check(b.hypothesis_inclusion(), b.is_base, label, "", {"inclusion_base"});
    r.check(b.hypothesis_dominated(), b.is_base, label, "", {"dominated_base"});
    r.check(b.hypothesis_dominated_stable(), b.is_base, label, "", {"dominated_stable_base"});
  }
}

// Limit and adherence sets of every quantified core, per pair.
struct FilterTables {
  std::vector<std::vector<Subset>> limits;
  std::vector<std::vector<Subset>> adherence;
};

FilterTables filter_tables(const SpaceContext& c) {
  FilterTables ft;
  for (const OpPair& p : c.pairs) {
    std::vector<Subset> lim, adh;
    for (Subset core : c.cores) {
      lim.push_back(limit_set(Filter(core), p));
      adh.push_back(adherence_set(Filter(core), p));
    }
    ft.limits.push_back(std::move(lim));
    ft.adherence.push_back(std::move(adh));
  }
  return ft;
}

void suite_filter_convergence(const SpaceContext& c, Recorder& r) {
  const FilterTables ft = filter_tables(c);
  const int n = c.t.size();
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const std::string label = pair_label(c.specs[i]);
    const bool monotone2 = is_monotone(p.phi2());
    const bool regular = c.regular[i] != 0;

    for (const Family& base : c.families.filterbases) {
      const Filter gen = generated_filter(base);
      for (int a = 0; a < n; ++a) {
        const bool ok = base_converges(base, p, a) == converges(gen, p, a) &&
                        base_accumulates(base, p, a) == accumulates(gen, p, a);
        r.require(ok, label, "base=" + family_text(c.ground(), base) + ",a=" + c.ground().label(a),
                  {"base_matches_generated_filter"});
      }
    }

    for (std::size_t k = 0; k < c.cores.size(); ++k) {
      const Subset core = c.cores[k];
      const Filter f(core);
      const Subset lim = ft.limits[i][k];
      const Subset adh = ft.adherence[i][k];
      const std::string subject = "core=" + c.fmt(core);
      const Family members = f.members(c.x);
      for (int a = 0; a < n; ++a) {
        const std::string sa = subject + ",a=" + c.ground().label(a);
        if (monotone2) {
          const Family single{core};
          const bool ok = base_converges(single, p, a, LocalSystem::neighborhoods) == lim.contains(a) &&
                          base_accumulates(single, p, a, LocalSystem::neighborhoods) == adh.contains(a);
          r.require(ok, label, sa, {"neighborhood_system_equivalent"});
        } else {
          r.check(false, true, label, sa, {"neighborhood_system_equivalent"});
        }
        bool images_in_filter = true;
        for (Subset u : p.phi1_open().containing(a)) images_in_filter = images_in_filter && f.contains(p.phi2()(u));
        r.require(lim.contains(a) == images_in_filter && lim.contains(a) == base_converges(members, p, a), label, sa,
                  {"convergence_via_images"});
      }
      r.require(lim.subset_of(adh), label, subject, {"convergence_implies_accumulation"},
                "limits " + c.fmt(lim) + " adherence " + c.fmt(adh));
      if (core.count() == 1) {
        r.require(adh.subset_of(lim), label, subject, {"maximal_accumulation_converges"});
      }

      // Finer filters: core' ⊂ core.
      Subset finer_limits;
      for (std::size_t k2 = 0; k2 < c.cores.size(); ++k2) {
        if (!c.cores[k2].subset_of(core)) continue;
        const std::string s2 = subject + ",finer=" + c.fmt(c.cores[k2]);
        r.require(ft.adherence[i][k2].subset_of(adh), label, s2, {"finer_accumulation_transfers"});
        r.require(lim.subset_of(ft.limits[i][k2]), label, s2, {"convergence_passes_to_finer"});
        finer_limits |= ft.limits[i][k2];
      }
      // Only exact when every subcore is quantified.
      r.check(regular && c.all_subsets, adh == finer_limits, label, subject, {"accumulation_iff_finer_convergent"},
              "adherence " + c.fmt(adh) + " vs finer limits " + c.fmt(finer_limits));
      if (regular) {
        for_each_point(adh, [&](int a) {
          bool ok = true;
          try {
            const Filter finer = finer_convergent(f, p, a);
            ok = finer.finer_than(f) && converges(finer, p, a);
          } catch (const Error&) {
            ok = false;
          }
          r.require(ok, label, subject + ",a=" + c.ground().label(a), {"finer_convergent_construction"});
        });
      }
    }

    // Transfer to pairs with fewer φ1-open sets and a larger enlarger.
    for (std::size_t j = 0; j < c.pairs.size(); ++j) {
      const OpPair& q = c.pairs[j];
      const bool hyp = q.phi1_open().subfamily_of(p.phi1_open()) && leq(p.phi2(), q.phi2());
      if (!hyp) {
        r.check(false, true, label + "|" + pair_label(c.specs[j]), "", {"pair_transfer"});
        continue;
      }
      bool ok = true;
      std::string witness;
      for (std::size_t k = 0; k < c.cores.size() && ok; ++k) {
        if (!ft.limits[i][k].subset_of(ft.limits[j][k]) || !ft.adherence[i][k].subset_of(ft.adherence[j][k])) {
          ok = false;
          witness = "core=" + c.fmt(c.cores[k]);
        }
      }
      r.require(ok, label + "|" + pair_label(c.specs[j]), "", {"pair_transfer"}, witness);
    }
  }
}

void suite_t2_uniqueness(const SpaceContext& c, Recorder& r) {
  const FilterTables ft = filter_tables(c);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const bool t2 = is_t2(c.pairs[i]);
    for (std::size_t k = 0; k < c.cores.size(); ++k) {
      const Subset lim = ft.limits[i][k];
      const Subset adh = ft.adherence[i][k];
      const bool ok = lim.empty() || (lim.count() == 1 && adh == lim);
      r.check(t2, ok, pair_label(c.specs[i]), "core=" + c.fmt(c.cores[k]), {"limit_unique_against_adherence"},
              "limits " + c.fmt(lim) + " adherence " + c.fmt(adh));
    }
  }
}

void suite_neighborhood_filterbases(const SpaceContext& c, Recorder& r) {
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const std::string label = pair_label(c.specs[i]);
    const bool incl = c.inclusion[i] != 0;
    const bool plain_hyp = incl && is_intersection_closed(p.phi1_open());
    const bool enlarged_hyp = incl && c.regular[i] != 0;
    for (int a = 0; a < c.t.size(); ++a) {
      const std::string subject = "a=" + c.ground().label(a);
      auto attempt = [&](NbhdVariant v) {
        try {
          (void)nbhd_filterbase(p, a, v);
          return true;
        } catch (const Error&) {
          return false;
        }
      };
      r.check(plain_hyp, plain_hyp && attempt(NbhdVariant::plain), label, subject, {"open_neighbourhood_base"});
      r.check(enlarged_hyp, enlarged_hyp && attempt(NbhdVariant::enlarged), label, subject,
              {"enlarged_neighbourhood_base"});
    }
  }
}

void suite_filter_closure(const SpaceContext& c, Recorder& r) {
  const std::size_t count = c.ground().subset_count();
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const std::string label = pair_label(c.specs[i]);
    const bool regular = c.regular[i] != 0;
    const bool incl = c.inclusion[i] != 0;
    const bool base_open = enlargement_base(p).subfamily_of(c.open12[i]);

    for (Subset a : c.subsets) {
      const std::string subject = "A=" + c.fmt(a);
      Subset adherent, limits;  // over all filters containing A
      for (Mask m = a.bits(); m != 0; m = (m - 1) & a.bits()) {
        adherent |= adherence_set(Filter(Subset(m)), p);
        limits |= limit_set(Filter(Subset(m)), p);
      }
      const Subset cl = p.closure(a);
      r.require(adherent.subset_of(cl), label, subject, {"accumulating_filter_point_in_closure"});
      r.check(regular, cl == limits, label, subject, {"closure_iff_convergent_filter"},
              "closure " + c.fmt(cl) + " vs limits " + c.fmt(limits));
      if (regular) {
        for_each_point(cl, [&](int pt) {
          bool ok = true;
          try {
            (void)convergent_filter_containing(p, a, pt);
          } catch (const Error&) {
            ok = false;
          }
          r.require(ok, label, subject + ",a=" + c.ground().label(pt), {"convergent_filter_construction"});
        });
      }
      r.check(regular, cl.subset_of(a) == limits.subset_of(a), label, subject, {"closed_iff_limits_inside"});
      r.require(cl_star(p, a, ClStarScan::singletons) == cl_star(p, a, ClStarScan::all_cores), label, subject,
                {"cl_star_singleton_scan"});
    }

    if (!c.all_subsets && count > 4096) continue;
    std::vector<Subset> star(count);
    for (std::size_t m = 0; m < count; ++m) star[m] = cl_star(p, Subset(static_cast<Mask>(m)));
    bool star_is_cl = true;
    std::vector<Subset> tau_sub, tau_eq;
    for (std::size_t m = 0; m < count; ++m) {
      const Subset u(static_cast<Mask>(m));
      if (star[m] != p.closure(u)) star_is_cl = false;
      const Subset k = c.x - u;
      if (star[k.bits()].subset_of(k)) tau_sub.push_back(u);
      if (star[k.bits()] == k) tau_eq.push_back(u);
    }
    const Family sub(std::move(tau_sub)), eq(std::move(tau_eq));
    r.check(regular, star_is_cl && sub == c.open12[i], label, "", {"cl_star_equals_closure", "tau_star_subset_form"},
            family_difference(c.ground(), sub, c.open12[i]));
    r.check(regular && incl, eq == c.open12[i] && is_topology(c.ground(), eq), label, "", {"tau_star_equal_form"},
            family_difference(c.ground(), eq, c.open12[i]));
    r.check(regular && incl && base_open, check_kuratowski(star, c.x).all() && eq == c.open12[i], label, "",
            {"cl_star_kuratowski"});
  }
}

void suite_cover_oracle(const SpaceContext& c, Recorder& r) {
  const int n = c.t.size();
  if (n > 3) return;
  std::set<Family> ambients;
  auto add = [&](const Family& f) {
    if (f.contains(c.x) && f.size() <= kBruteForceMaxAmbient) ambients.insert(f);
  };
  for (const Operation& f : c.ops) add(phi_open_family(f));
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    add(c.open12[i]);
    const Family eb = enlargement_base(c.pairs[i]);
    std::vector<Subset> base(eb.begin(), eb.end());
    base.push_back(c.x);
    add(Family(std::move(base)));
  }
  for (NamedFamily nf : {NamedFamily::SO, NamedFamily::SC, NamedFamily::PO, NamedFamily::PC, NamedFamily::RO,
                         NamedFamily::RC, NamedFamily::SR, NamedFamily::tau_theta, NamedFamily::tau_s,
                         NamedFamily::SthetaO, NamedFamily::SthetaC, NamedFamily::thetaSO, NamedFamily::thetaSC}) {
    add(named_family(c.t, nf));
  }
  std::vector<Operation> enlargers = c.ops;
  if (n <= 2) {
    // Every family containing X, and every operation on the space.
    const std::size_t subsets = c.ground().subset_count();
    const std::size_t others = subsets - 1;
    for (std::size_t f = 0; f < (std::size_t{1} << others); ++f) {
      std::vector<Subset> members{c.x};
      for (std::size_t s = 0; s < others; ++s) {
        if ((f >> s) & 1U) members.emplace_back(static_cast<Mask>(s));
      }
      ambients.insert(Family(std::move(members)));
    }
    enlargers.clear();
    std::vector<std::vector<Subset>> choices(subsets);
    for (std::size_t a = 1; a < subsets; ++a) {
      const Subset in = c.t.interior(Subset(static_cast<Mask>(a)));
      for (Mask m = 0; m <= c.x.bits(); ++m) {
        if (in.subset_of(Subset(m))) choices[a].emplace_back(m);
      }
    }
    std::vector<std::size_t> idx(subsets, 0);
    while (true) {
      std::vector<Subset> table(subsets);
      for (std::size_t a = 1; a < subsets; ++a) table[a] = choices[a][idx[a]];
      enlargers.emplace_back(c.t, std::move(table), "table" + std::to_string(enlargers.size()));
      std::size_t k = 1;
      while (k < subsets && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k >= subsets) break;
    }
  }

  for (const Family& amb : ambients) {
    for (const Operation& f : enlargers) {
      const CoverSystem cs(amb, f);
      for (Subset a : c.subsets) {
        const CompactnessVerdict v = is_compact(cs, a);
        bool witness_ok = true;
        if (!v.compact) {
          const int pt = *v.witness_point;
          const Family& cover = *v.witness_cover;
          witness_ok = a.contains(pt) && is_cover(cover, a) && cover.subfamily_of(amb);
          for (Subset u : cover) witness_ok = witness_ok && !f(u).contains(pt);
        }
        r.require(v.compact == brute_force_compact(cs, a) && witness_ok, f.name(),
                  "ambient=" + family_text(c.ground(), amb) + ",A=" + c.fmt(a), {"fast_matches_brute_force"});
      }
    }
  }
}

// verdicts[pair][subset index]
std::vector<std::vector<char>> compact_table(const SpaceContext& c, CompactnessKind kind) {
  std::vector<std::vector<char>> out;
  for (const OpPair& p : c.pairs) {
    const CoverSystem cs = cover_system(p, kind);
    std::vector<char> row;
    for (Subset a : c.subsets) row.push_back(is_compact(cs, a).compact ? 1 : 0);
    out.push_back(std::move(row));
  }
  return out;
}

void suite_compactness_monotonicity(const SpaceContext& c, Recorder& r) {
  const auto verdict = compact_table(c, CompactnessKind::phi12);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    for (std::size_t j = 0; j < c.pairs.size(); ++j) {
      const OpPair& p = c.pairs[i];
      const OpPair& q = c.pairs[j];
      const std::string label = pair_label(c.specs[i]) + "|" + pair_label(c.specs[j]);
      const bool leq1 = leq(q.phi1(), p.phi1());
      r.check(leq1, q.phi1_open().subfamily_of(p.phi1_open()), label, "", {"smaller_operation_fewer_open_sets"});
      const bool hyp = q.phi1_open().subfamily_of(p.phi1_open()) && leq(p.phi2(), q.phi2());
      if (!hyp) {
        r.check(false, true, label, "", {"compactness_transfers"});
        continue;
      }
      for (std::size_t k = 0; k < c.subsets.size(); ++k) {
        r.require(!verdict[i][k] || verdict[j][k], label, "A=" + c.fmt(c.subsets[k]), {"compactness_transfers"});
      }
    }
  }
}

std::vector<std::string> mismatches(std::span<const Statement> st) {
  std::optional<bool> ref;
  for (const Statement& s : st) {
    if (s.value) {
      ref = s.value;
      break;
    }
  }
  std::vector<std::string> out;
  if (!ref) return out;
  for (const Statement& s : st) {
    if (s.value && *s.value != *ref) out.emplace_back(s.label);
  }
  return out;
}

std::string statement_values(std::span<const Statement> st) {
  std::string out;
  for (const Statement& s : st) {
    if (!out.empty()) out += ' ';
    out += std::string(s.label) + "=" + (s.value ? (*s.value ? "1" : "0") : "-");
  }
  return out;
}

void suite_compactness_characterizations(const SpaceContext& c, Recorder& r) {
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    for (Subset a : c.subsets) {
      const auto res = characterize_compactness(c.pairs[i], a, c.families);
      auto diff = mismatches(res.statements);
      const bool dual_missing = !res.statements[8].value || !res.statements[9].value;
      if (dual_missing) diff.emplace_back("dual_unavailable");
      r.require(diff.empty(), pair_label(c.specs[i]), "A=" + c.fmt(a), diff, statement_values(res.statements));
    }
  }
}

void suite_base_compactness(const SpaceContext& c, Recorder& r) {
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const OpPair& p = c.pairs[i];
    const std::string label = pair_label(c.specs[i]);
    const SpaceSuiteResult space = space_compactness_suite(p);
    r.check(space.hypothesis, mismatches(space.statements).empty(), label, "X", mismatches(space.statements),
            statement_values(space.statements));
    for (Subset a : c.subsets) {
      const BaseSuiteResult res = base_compactness_suite(p, a, c.policy);
      r.check(res.hypothesis, mismatches(res.statements).empty(), label, "A=" + c.fmt(a), mismatches(res.statements),
              statement_values(res.statements));
    }
  }
}

void suite_compactness_transfer(const SpaceContext& c, Recorder& r) {
  const auto phi12 = compact_table(c, CompactnessKind::phi12);
  const auto open12 = compact_table(c, CompactnessKind::phi12_open);
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    for (std::size_t j = 0; j < c.pairs.size(); ++j) {
      if (i == j || c.specs[i].first != c.specs[j].first) continue;
      const OpPair& p = c.pairs[i];
      const OpPair& q = c.pairs[j];
      const std::string label = pair_label(c.specs[i]) + "|" + pair_label(c.specs[j]);
      const bool hyp = std::all_of(p.phi1_open().begin(), p.phi1_open().end(),
                                   [&](Subset u) { return p.phi2()(u) == q.phi2()(u); });
      r.check(hyp, c.open12[i] == c.open12[j], label, "", {"same_open_family"},
              family_difference(c.ground(), c.open12[i], c.open12[j]));
      for (std::size_t k = 0; k < c.subsets.size(); ++k) {
        r.check(hyp, phi12[i][k] == phi12[j][k] && open12[i][k] == open12[j][k], label,
                "A=" + c.fmt(c.subsets[k]), {"same_compact_sets"});
      }
    }
  }
}

void suite_additive_compactness(const SpaceContext& c, Recorder& r) {
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const bool hyp = additive_suite_hypothesis(c.pairs[i]);
    for (Subset a : c.subsets) {
      const AdditiveSuiteResult res = additive_compactness_suite(c.pairs[i], a, c.policy);
      r.check(hyp, mismatches(res.statements).empty(), pair_label(c.specs[i]), "A=" + c.fmt(a),
              mismatches(res.statements), statement_values(res.statements));
    }
  }
}

void suite_set_class_chain(const SpaceContext& c, Recorder& r) {
  const std::pair<SetClass, SetClass> chain[] = {
      {SetClass::N, SetClass::H}, {SetClass::s, SetClass::S}, {SetClass::S, SetClass::H}};
  const char* names[] = {"N_implies_H", "s_implies_S", "S_implies_H"};
  std::map<SetClass, CoverSystem> systems;
  for (SetClass sc : {SetClass::H, SetClass::N, SetClass::s, SetClass::S}) {
    const auto [a, b] = set_class_pair(sc);
    systems.emplace(sc, cover_system(OpPair(c.op(a), c.op(b)), CompactnessKind::phi12));
  }
  for (Subset a : c.subsets) {
    for (std::size_t k = 0; k < 3; ++k) {
      const bool from = is_compact(systems.at(chain[k].first), a).compact;
      const bool to = is_compact(systems.at(chain[k].second), a).compact;
      r.require(!from || to, "", "A=" + c.fmt(a), {names[k]});
    }
  }
}

using SuiteFn = void (*)(const SpaceContext&, Recorder&);

SuiteFn suite_function(std::string_view name) {
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"operation_catalog", suite_operation_catalog},
      {"open_family_inclusion", suite_open_family_inclusion},
      {"phi12_structure", suite_phi12_structure},
      {"named_families", suite_named_families},
      {"base_theorem", suite_base_theorem},
      {"filter_convergence", suite_filter_convergence},
      {"t2_uniqueness", suite_t2_uniqueness},
      {"neighborhood_filterbases", suite_neighborhood_filterbases},
      {"filter_closure", suite_filter_closure},
      {"cover_oracle", suite_cover_oracle},
      {"compactness_monotonicity", suite_compactness_monotonicity},
      {"compactness_characterizations", suite_compactness_characterizations},
      {"base_compactness", suite_base_compactness},
      {"compactness_transfer", suite_compactness_transfer},
      {"additive_compactness", suite_additive_compactness},
      {"set_class_chain", suite_set_class_chain},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteConfig parse_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config: expected a JSON object");
  SuiteConfig cfg;
  auto get_int = [&](const std::string& key, int lo, int hi, int& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer()) throw UsageError("config." + key + ": expected an integer");
    const auto v = doc[key].get<long long>();
    if (v < lo || v > hi) {
      throw UsageError("config." + key + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    out = static_cast<int>(v);
  };
  static const std::set<std::string> known = {"n_exhaustive", "n_sampled", "samples", "seed", "pairs", "suites",
                                              "subset_samples", "random_families", "threads"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw UsageError("config: unknown key '" + key + "'");
  }
  get_int("n_exhaustive", 0, kMaxExhaustivePoints, cfg.n_exhaustive);
  get_int("n_sampled", 0, kMaxPoints, cfg.n_sampled);
  get_int("samples", 0, 100000, cfg.samples);
  get_int("subset_samples", 0, 1 << 16, cfg.subset_samples);
  get_int("random_families", 0, 100000, cfg.random_families);
  get_int("threads", 0, 1024, cfg.threads);
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw UsageError("config.seed: expected a non-negative integer");
    }
    if (doc["seed"].is_number_integer() && doc["seed"].get<long long>() < 0) {
      throw UsageError("config.seed: expected a non-negative integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("pairs")) {
    const auto& pairs = doc["pairs"];
    if (pairs.is_string() && pairs.get<std::string>() == "catalog") {
      cfg.pairs = catalog_pairs();
    } else if (pairs.is_array()) {
      cfg.pairs.clear();
      for (const auto& item : pairs) {
        if (!item.is_string()) throw UsageError("config.pairs: expected strings like \"int,cl\"");
        const std::string s = item.get<std::string>();
        const auto comma = s.find(',');
        const auto a = parse_operation_name(s.substr(0, comma));
        const auto b = comma == std::string::npos ? std::nullopt : parse_operation_name(s.substr(comma + 1));
        if (!a || !b) throw UsageError("config.pairs: unknown pair '" + s + "'");
        cfg.pairs.emplace_back(*a, *b);
      }
    } else {
      throw UsageError("config.pairs: expected \"catalog\" or an array of pairs");
    }
  }
  if (doc.contains("suites")) {
    const auto& suites = doc["suites"];
    if (suites.is_string() && suites.get<std::string>() == "all") {
      cfg.suites = suite_names();
    } else if (suites.is_array()) {
      cfg.suites.clear();
      for (const auto& item : suites) {
        if (!item.is_string() || !suite_function(item.get<std::string>())) {
          throw UsageError("config.suites: unknown suite " + item.dump());
        }
        cfg.suites.push_back(item.get<std::string>());
      }
    } else {
      throw UsageError("config.suites: expected \"all\" or an array of suite names");
    }
  }
  return cfg;
}

int resolve_thread_count(int requested) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("TOPOLAB_THREADS")) threads = std::atoi(env);
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(threads, 1);
}

std::vector<SweepSpace> sweep_spaces(const SuiteConfig& cfg) {
  std::vector<SweepSpace> out;
  for (int n = 1; n <= cfg.n_exhaustive; ++n) {
    int idx = 0;
    for_each_topology(n, [&](const Topology& t) {
      out.push_back({"e" + std::to_string(n) + "-" + padded(idx++, 3), t});
    });
  }
  for (int i = 0; i < cfg.samples; ++i) {
    const std::uint64_t s = splitmix64(cfg.seed ^ (0x100000001b3ULL * static_cast<std::uint64_t>(i + 1)));
    const int size = cfg.n_sampled == 0 ? 0 : 1 + static_cast<int>(s % static_cast<std::uint64_t>(2 * cfg.n_sampled));
    out.push_back({"r" + std::to_string(cfg.n_sampled) + "-" + padded(i, 3), random_topology(cfg.n_sampled, s, size)});
  }
  return out;
}

Report run_suites(const SuiteConfig& cfg) { return run_suites(cfg, sweep_spaces(cfg)); }

Report run_suites(const SuiteConfig& cfg, const std::vector<SweepSpace>& spaces) {
  std::vector<SuiteFn> fns;
  for (const auto& name : cfg.suites) {
    SuiteFn fn = suite_function(name);
    if (!fn) throw UsageError("unknown suite '" + name + "'");
    fns.push_back(fn);
  }

  std::vector<std::vector<SuiteReport>> partial(spaces.size(), std::vector<SuiteReport>(fns.size()));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t s = next++; s < spaces.size(); s = next++) {
      try {
        const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(s + 1));
        const SpaceContext ctx(spaces[s], cfg, seed);
        for (std::size_t k = 0; k < fns.size(); ++k) {
          Recorder rec(partial[s][k], ctx);
          fns[k](ctx, rec);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(resolve_thread_count(cfg.threads), std::max<int>(1, static_cast<int>(spaces.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  Report report;
  report.config = cfg;
  report.spaces = spaces.size();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    SuiteReport merged;
    merged.name = cfg.suites[k];
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      SuiteReport& part = partial[s][k];
      merged.instances_checked += part.instances_checked;
      merged.hypothesis_held += part.hypothesis_held;
      std::move(part.failures.begin(), part.failures.end(), std::back_inserter(merged.failures));
    }
    std::sort(merged.failures.begin(), merged.failures.end());
    report.suites.push_back(std::move(merged));
  }
  return report;
}

std::string emit_report(const Report& report) {
  ordered_json doc;
  doc["tool"] = "topolab";
  ordered_json env;
  env["seed"] = report.config.seed;
  env["version"] = std::string(kVersion);
  doc["environment"] = env;
  ordered_json cfg;
  cfg["n_exhaustive"] = report.config.n_exhaustive;
  cfg["n_sampled"] = report.config.n_sampled;
  cfg["samples"] = report.config.samples;
  cfg["subset_samples"] = report.config.subset_samples;
  cfg["random_families"] = report.config.random_families;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : report.config.pairs) pairs.push_back(pair_label(p));
  cfg["pairs"] = pairs;
  cfg["suites"] = report.config.suites;
  doc["config"] = cfg;
  doc["spaces"] = report.spaces;
  ordered_json suites = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json js;
    js["name"] = s.name;
    js["instances_checked"] = s.instances_checked;
    js["hypothesis_held"] = s.hypothesis_held;
    ordered_json failures = ordered_json::array();
    for (const auto& f : s.failures) {
      ordered_json jf;
      jf["space"] = f.space;
      jf["pair"] = f.pair;
      jf["subject"] = f.subject;
      jf["statements"] = f.statements;
      jf["witness"] = f.witness;
      failures.push_back(std::move(jf));
    }
    js["failures"] = std::move(failures);
    suites.push_back(std::move(js));
  }
  doc["suites"] = std::move(suites);
  doc["total_failures"] = report.total_failures();
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::optional<MineTarget> parse_mine_target(std::string_view text) {
  if (text == "lemma21_converse" || text == "open_family_converse") return MineTarget::open_family_converse;
  if (text == "thm32_strictness" || text == "compactness_strictness") return MineTarget::compactness_strictness;
  if (text == "nonregular_pair") return MineTarget::nonregular_pair;
  if (text == "thm311_hypothesis_failure" || text == "additivity_failure") return MineTarget::additivity_failure;
  return std::nullopt;
}

std::string_view to_string(MineTarget target) {
  switch (target) {
    case MineTarget::open_family_converse: return "open_family_converse";
    case MineTarget::compactness_strictness: return "compactness_strictness";
    case MineTarget::nonregular_pair: return "nonregular_pair";
    case MineTarget::additivity_failure: return "additivity_failure";
  }
  return "?";
}

namespace {

ordered_json space_json(const Topology& t) {
  ordered_json j;
  j["points"] = t.ground().labels();
  j["opens"] = family_json(t.ground(), t.opens());
  return j;
}

std::optional<Subset> leq_failure(const Operation& a, const Operation& b) {
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    if (!a.table()[i].subset_of(b.table()[i])) return Subset(static_cast<Mask>(i));
  }
  return std::nullopt;
}

void mine_space(MineTarget target, const std::string& id, const Topology& t, std::vector<MineWitness>& out) {
  const GroundSet& g = t.ground();
  std::vector<Operation> ops;
  for (OperationName n : kCatalog) ops.push_back(builtin(t, n));
  const Operation& id_op = ops[static_cast<std::size_t>(OperationName::identity)];
  auto emit = [&](ordered_json detail) {
    ordered_json d;
    d["target"] = std::string(to_string(target));
    d["space"] = space_json(t);
    for (auto& [k, v] : detail.items()) d[k] = v;
    out.push_back({id, std::move(d)});
  };

  switch (target) {
    case MineTarget::open_family_converse:
      for (const Operation& a : ops) {
        for (const Operation& b : ops) {
          if (!phi_open_family(a).subfamily_of(phi_open_family(b))) continue;
          const auto order = leq_failure(a, b);
          const auto ident = leq_failure(id_op, b);
          if (!order || !ident) continue;
          ordered_json d;
          d["pair"] = a.name() + "," + b.name();
          d["order_witness"] = subset_json(g, *order);
          d["identity_witness"] = subset_json(g, *ident);
          emit(std::move(d));
        }
      }
      break;
    case MineTarget::compactness_strictness: {
      std::vector<OpPair> pairs;
      for (const Operation& a : ops) {
        for (const Operation& b : ops) pairs.emplace_back(a, b);
      }
      std::vector<CoverSystem> systems;
      for (const OpPair& p : pairs) systems.push_back(cover_system(p, CompactnessKind::phi12));
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if (i == j) continue;
          const OpPair& p = pairs[i];
          const OpPair& q = pairs[j];
          if (!q.phi1_open().subfamily_of(p.phi1_open()) || !leq(p.phi2(), q.phi2())) continue;
          for (Mask m = 0; m <= t.universe().bits(); ++m) {
            const Subset a(m);
            if (is_compact(systems[i], a).compact || !is_compact(systems[j], a).compact) continue;
            ordered_json d;
            d["pair"] = p.label();
            d["weaker_pair"] = q.label();
            d["set"] = subset_json(g, a);
            emit(std::move(d));
            break;  // smallest witness set per pair of pairs
          }
        }
      }
      break;
    }
    case MineTarget::nonregular_pair: {
      for (const Operation& a : ops) {
        for (const Operation& b : ops) {
          const auto v = find_regularity_violation(b, phi_open_family(a));
          if (!v) continue;
          ordered_json d;
          d["kind"] = "pair";
          d["pair"] = a.name() + "," + b.name();
          d["point"] = g.label(v->point);
          d["sets"] = ordered_json::array({subset_json(g, v->first), subset_json(g, v->second)});
          emit(std::move(d));
        }
      }
      if (t.size() > 3) break;
      // Explicit families of nonempty sets containing X.
      const Subset x = t.universe();
      for (const Family& f : all_nonempty_families(t.size())) {
        if (!f.contains(x)) continue;
        for (const Operation& op : ops) {
          const auto v = find_regularity_violation(op, f);
          if (!v) continue;
          ordered_json d;
          d["kind"] = "family";
          d["operation"] = op.name();
          d["family"] = family_json(g, f);
          d["point"] = g.label(v->point);
          d["sets"] = ordered_json::array({subset_json(g, v->first), subset_json(g, v->second)});
          emit(std::move(d));
        }
      }
      break;
    }
    case MineTarget::additivity_failure:
      for (const Operation& a : ops) {
        for (const Operation& b : ops) {
          ordered_json d;
          d["pair"] = a.name() + "," + b.name();
          if (!is_monotone(a)) {
            d["reason"] = "phi1_not_monotone";
            emit(std::move(d));
            continue;
          }
          const Family open = phi_open_family(a);
          bool found = false;
          for (std::size_t i = 0; i < open.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < open.size() && !found; ++j) {
              if (b(open[i] | open[j]) == (b(open[i]) | b(open[j]))) continue;
              d["reason"] = "phi2_not_additive";
              d["sets"] = ordered_json::array({subset_json(g, open[i]), subset_json(g, open[j])});
              found = true;
            }
          }
          if (found) emit(std::move(d));
        }
      }
      break;
  }
}

}  // namespace

std::vector<MineWitness> mine_counterexamples(MineTarget target, int n_max) {
  if (n_max < 0 || n_max > kMaxExhaustivePoints) throw UsageError("mine supports --n-max up to 4");
  std::vector<MineWitness> out;
  for (int n = 1; n <= n_max; ++n) {
    int idx = 0;
    for_each_topology(n, [&](const Topology& t) {
      mine_space(target, "e" + std::to_string(n) + "-" + padded(idx++, 3), t, out);
    });
  }
  return out;
}

}  // namespace topolab
