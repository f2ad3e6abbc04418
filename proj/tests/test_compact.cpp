#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "topolab/compact.hpp"

using namespace topolab;
using namespace topolab::fixtures;
using O = OperationName;

namespace {

Family fam(std::initializer_list<Mask> masks) {
  std::vector<Subset> v;
  for (Mask m : masks) v.emplace_back(m);
  return Family(std::move(v));
}

oracle::Op as_op(const Operation& f) {
  return [f](Mask a) { return f(Subset(a)).bits(); };
}

}  // namespace

TEST_CASE("is_cover examples") {
  CHECK(is_cover(fam({3}), Subset(1)));
  CHECK_FALSE(is_cover(fam({1}), Subset(3)));
  Family so = named_family(chain3(), NamedFamily::SO);
  std::vector<Subset> proper;
  for (Subset s : so)
    if (s != chain3().universe()) proper.push_back(s);
  CHECK(is_cover(Family(proper), chain3().universe()));
}

TEST_CASE("is_compact examples") {
  const Topology s2 = sierpinski();
  const CoverSystem cs(all_subsets(2), builtin(s2, O::sint));
  const CompactnessVerdict v = is_compact(cs, Subset(2));
  CHECK_FALSE(v.compact);
  REQUIRE(v.witness_point);
  CHECK(*v.witness_point == 1);
  CHECK(*v.witness_cover == fam({2}));
  CHECK_FALSE(brute_force_compact(cs, Subset(2)));
  CHECK(is_compact(cs, Subset{}).compact);
  CHECK_THROWS_AS(CoverSystem(fam({1}), builtin(s2, O::identity)), UsageError);
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const CoverSystem tc(t.opens(), builtin(t, O::closure));
      for (Mask a = 0; a <= t.universe().bits(); ++a) CHECK(is_compact(tc, Subset(a)).compact);
    });
  }
}

TEST_CASE("fast criterion and brute force match the definition") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Subset> members{t.universe()};
        const int k = static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) members.emplace_back(static_cast<Mask>(rng()) & t.universe().bits());
        const Family amb(members);
        for (O name : kCatalog) {
          const Operation f = builtin(t, name);
          const CoverSystem cs(amb, f);
          for (Mask a = 0; a <= t.universe().bits(); ++a) {
            const bool ref = oracle::compact(oracle::to_sets(amb), as_op(f), a);
            const CompactnessVerdict v = is_compact(cs, Subset(a));
            CHECK(v.compact == ref);
            CHECK(brute_force_compact(cs, Subset(a)) == ref);
            if (!v.compact) {
              CHECK(is_cover(*v.witness_cover, Subset(a)));
              for (Subset u : *v.witness_cover) CHECK_FALSE(f(u).contains(*v.witness_point));
            }
          }
        }
      }
    });
  }
}

TEST_CASE("witness covers are irredundant") {
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const CoverSystem cs(all_subsets(n), builtin(t, O::sint));
      for (Mask a = 1; a <= t.universe().bits(); ++a) {
        const CompactnessVerdict v = is_compact(cs, Subset(a));
        if (v.compact) continue;
        const Family& cover = *v.witness_cover;
        for (std::size_t skip = 0; skip < cover.size(); ++skip) {
          std::vector<Subset> rest;
          for (std::size_t i = 0; i < cover.size(); ++i)
            if (i != skip) rest.push_back(cover[i]);
          CHECK_FALSE(is_cover(Family(rest), Subset(a)));
        }
      }
    });
  }
}

TEST_CASE("brute force limits") {
  const Topology t = discrete(5);
  CHECK_THROWS_AS(brute_force_compact(CoverSystem(all_subsets(5), builtin(t, O::identity)), t.universe()), UsageError);
  const CoverSystem single(fam({3}), builtin(discrete(2), O::identity));
  for (Mask a = 0; a < 4; ++a) CHECK(brute_force_compact(single, Subset(a)));
}

TEST_CASE("set classes") {
  const Topology t = discrete(2);
  for (SetClass c : {SetClass::H, SetClass::N, SetClass::s, SetClass::S, SetClass::compact})
    CHECK(named_set_class(t, Subset{}, c));
  CHECK(set_class_pair(SetClass::H) == std::pair{O::interior, O::closure});
  CHECK(set_class_pair(SetClass::compact) == std::pair{O::interior, O::identity});
  for (int n = 1; n <= 4; ++n) {
    for_each_topology(n, [&](const Topology& sp) {
      for (Mask a = 0; a <= sp.universe().bits(); ++a) {
        const Subset s(a);
        if (named_set_class(sp, s, SetClass::N)) CHECK(named_set_class(sp, s, SetClass::H));
        if (named_set_class(sp, s, SetClass::s)) CHECK(named_set_class(sp, s, SetClass::S));
        if (named_set_class(sp, s, SetClass::S)) CHECK(named_set_class(sp, s, SetClass::H));
      }
    });
  }
}

TEST_CASE("characterization statements") {
  const QuantifiedFamilies q2 = make_quantified_families(2, {});
  const CharacterizationResult empty = characterize_compactness(OpPair::of(sierpinski(), O::interior, O::closure),
                                                                Subset{}, q2);
  for (const Statement& s : empty.statements) {
    REQUIRE(s.value);
    CHECK(*s.value);
  }
  const CharacterizationResult d2 =
      characterize_compactness(OpPair::of(discrete(2), O::interior, O::identity), Subset(1), q2);
  for (const Statement& s : d2.statements) {
    REQUIRE(s.value);
    CHECK(*s.value);
  }
}

TEST_CASE("antichains quantify as well as all families") {
  // The closure-family statements are determined by antichains, so the
  // reduced universe must agree with the full one.
  for (int n = 2; n <= 3; ++n) {
    QuantifiedFamilies reduced = make_quantified_families(n, {});
    QuantifiedFamilies full = reduced;
    full.nonempty_families = all_nonempty_families(n);
    CHECK(reduced.nonempty_families.size() < full.nonempty_families.size());
    for_each_topology(n, [&](const Topology& t) {
      for (O a : kCatalog)
        for (O b : kCatalog) {
          const OpPair p = OpPair::of(t, a, b);
          for (Mask s = 0; s <= t.universe().bits(); ++s) {
            const auto r = characterize_compactness(p, Subset(s), reduced);
            const auto f = characterize_compactness(p, Subset(s), full);
            for (std::size_t i = 0; i < r.statements.size(); ++i) CHECK(r.statements[i].value == f.statements[i].value);
          }
        }
    });
  }
}

TEST_CASE("quantified families") {
  const QuantifiedFamilies q = make_quantified_families(3, {});
  CHECK(q.exhaustive);
  for (const Family& f : q.filterbases) CHECK(is_filterbase(f));
  const QuantifiedFamilies big = make_quantified_families(6, {3, 5, 9});
  CHECK_FALSE(big.exhaustive);
  for (const Family& f : big.filterbases) CHECK(is_filterbase(f));
  for (const Family& f : big.nonempty_families)
    for (Subset s : f) CHECK_FALSE(s.empty());
  CHECK(make_quantified_families(6, {3, 5, 9}).filterbases == big.filterbases);
  CHECK(all_nonempty_families(2).size() == 8);
  CHECK_THROWS_AS(all_nonempty_families(4), UsageError);
  CHECK(subfamilies(fam({1, 2, 3}), 0, 4).size() == 8);
}

TEST_CASE("suite examples") {
  const BaseSuiteResult empty = base_compactness_suite(OpPair::of(chain3(), O::cloint, O::closure), Subset{}, {});
  for (const Statement& s : empty.statements) CHECK(s.value == true);
  const SpaceSuiteResult s2 = space_compactness_suite(OpPair::of(sierpinski(), O::interior, O::introcl));
  for (const Statement& s : s2.statements) CHECK(s.value == true);
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const SpaceSuiteResult r = space_compactness_suite(OpPair::of(t, O::cloint, O::closure));
      if (!r.hypothesis) return;
      for (const Statement& s : r.statements) CHECK(s.value == r.statements[0].value);
    });
  }
}

TEST_CASE("closed space predicates") {
  const ClosedSpacePredicates d2 = closed_space_predicates(discrete(2), OpPair::of(discrete(2), O::interior, O::closure));
  CHECK(d2.hausdorff);
  CHECK(d2.s_closed);
  CHECK(d2.h_closed);
  const ClosedSpacePredicates s2 =
      closed_space_predicates(sierpinski(), OpPair::of(sierpinski(), O::interior, O::closure));
  CHECK_FALSE(s2.hausdorff);
  CHECK_FALSE(s2.s_closed);
  CHECK_FALSE(s2.h_closed);
  CHECK_FALSE(closed_space_predicates(indiscrete(2), OpPair::of(indiscrete(2), O::interior, O::closure)).hausdorff);
}
