#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "topolab/space.hpp"

using namespace topolab;
using namespace topolab::fixtures;

namespace {

Family fam(std::initializer_list<Mask> masks) {
  std::vector<Subset> v;
  for (Mask m : masks) v.emplace_back(m);
  return Family(std::move(v));
}

}  // namespace

TEST_CASE("subset bit operations") {
  const Subset a(0b0110), b(0b0011);
  CHECK((a | b).bits() == 0b0111);
  CHECK((a & b).bits() == 0b0010);
  CHECK((a - b).bits() == 0b0100);
  CHECK(a.count() == 2);
  CHECK(a.first() == 1);
  CHECK(Subset::singleton(3).bits() == 0b1000);
  CHECK(Subset::full(16).bits() == 0xFFFF);
  CHECK(Subset(0b0010).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  std::vector<int> pts;
  for_each_point(Subset(0b1010), [&](int p) { pts.push_back(p); });
  CHECK(pts == std::vector<int>{1, 3});
}

TEST_CASE("ground set labels") {
  const GroundSet g({"a", "b", "c"});
  CHECK(g.size() == 3);
  CHECK(g.index_of("b") == 1);
  CHECK_FALSE(g.index_of("z"));
  CHECK(g.format(Subset(0b101)) == "{a,c}");
  CHECK(g.format(Subset{}) == "{}");
  CHECK_THROWS_AS(GroundSet({"a", "a"}), SchemaError);
  std::vector<std::string> many(17);
  for (int i = 0; i < 17; ++i) many[i] = std::to_string(i);
  CHECK_THROWS(GroundSet(many));
}

TEST_CASE("family is sorted and unique") {
  const Family f = fam({3, 1, 3, 0});
  REQUIRE(f.size() == 3);
  CHECK(f[0].bits() == 0);
  CHECK(f[2].bits() == 3);
  CHECK(f.contains(Subset(1)));
  CHECK_FALSE(f.contains(Subset(2)));
  CHECK(f.join().bits() == 3);
  CHECK(f.meet(Subset(3)).bits() == 0);
  CHECK(f.complements(Subset(3)) == fam({3, 2, 0}));
  CHECK(f.containing(0) == fam({1, 3}));
}

TEST_CASE("build_topology examples") {
  const GroundSet g = GroundSet::numbered(2);
  CHECK(build_topology(g, Family{}).opens() == fam({0, 3}));
  CHECK(build_topology(g, fam({1, 2})).opens() == fam({0, 1, 2, 3}));
  CHECK(build_topology(g, fam({1})).opens() == fam({0, 1, 3}));
}

TEST_CASE("build_topology agrees with the fixed-point closure") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % 5);
    std::vector<Subset> sub;
    oracle::Sets raw;
    for (int i = 0; i < k; ++i) {
      const Mask m = static_cast<Mask>(rng()) & oracle::full(n);
      sub.emplace_back(m);
      raw.push_back(m);
    }
    const Topology t = build_topology(GroundSet::numbered(n), Family(sub));
    CHECK(oracle::to_sets(t.opens()) == oracle::fixed_point_topology(n, raw));
  }
}

TEST_CASE("is_topology examples") {
  const GroundSet g2 = GroundSet::numbered(2);
  CHECK(is_topology(g2, fam({0, 3})));
  CHECK_FALSE(is_topology(g2, fam({0, 1, 2})));
  CHECK(is_topology(GroundSet({"a", "b", "c"}), fam({0, 1, 3, 7})));

  const auto v = find_topology_violation(g2, fam({0, 1, 2}));
  REQUIRE(v);
  CHECK(v->kind == TopologyViolation::Kind::missing_universe);
  const auto u = find_topology_violation(GroundSet::numbered(3), fam({0, 1, 2, 7}));
  REQUIRE(u);
  CHECK(u->kind == TopologyViolation::Kind::union_not_closed);
  CHECK(describe(*u, GroundSet::numbered(3)).find("{0}") != std::string::npos);
  const auto i = find_topology_violation(GroundSet::numbered(3), fam({0, 3, 6, 7}));
  REQUIRE(i);
  CHECK(i->kind == TopologyViolation::Kind::intersection_not_closed);
  CHECK_THROWS_AS(Topology(g2, fam({0, 1, 2})), SchemaError);
}

TEST_CASE("interior and closure examples") {
  const Topology s2 = sierpinski();
  const Topology c3 = chain3();
  CHECK(s2.interior(Subset(0b10)).empty());
  CHECK(s2.closure(Subset(0b01)) == s2.universe());
  CHECK(c3.interior(Subset(0b110)).empty());
  CHECK(c3.closure(Subset(0b010)).bits() == 0b110);
  for (const Topology& t : {s2, c3, discrete(3), indiscrete(3)}) {
    CHECK(t.interior(t.universe()) == t.universe());
    CHECK(t.closure(Subset{}).empty());
  }
}

TEST_CASE("interior and closure match the literal definitions") {
  for (int n = 0; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const oracle::Sets opens = oracle::to_sets(t.opens());
      for (Mask a = 0; a <= oracle::full(n); ++a) {
        CHECK(t.interior(Subset(a)).bits() == oracle::interior(opens, a));
        CHECK(t.closure(Subset(a)).bits() == oracle::closure(opens, a, n));
      }
    });
  }
}

TEST_CASE("enumeration matches the preorder oracle") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    std::set<oracle::Sets> ours;
    std::size_t count = 0;
    for_each_topology(n, [&](const Topology& t) {
      ++count;
      CHECK(is_topology(t.ground(), t.opens()));
      ours.insert(oracle::to_sets(t.opens()));
    });
    CHECK(count == expected[n]);
    CHECK(ours.size() == count);
    CHECK(ours == oracle::preorder_topologies(n));
  }
  CHECK_THROWS_AS(enumerate_topologies(5), UsageError);
}

TEST_CASE("random_topology") {
  const Topology indisc = random_topology(5, 1, 0);
  CHECK(indisc.opens() == fam({0, 31}));
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(random_topology(1, seed, 3).opens() == fam({0, 1}));
  const Topology t = random_topology(5, 7, 3);
  CHECK(is_topology(t.ground(), t.opens()));
  CHECK(random_topology(9, 42, 6) == random_topology(9, 42, 6));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Topology r = random_topology(8, seed, 1 + static_cast<int>(seed % 9));
    CHECK(is_topology(r.ground(), r.opens()));
  }
}

TEST_CASE("fixtures") {
  CHECK(sierpinski().opens() == fam({0, 1, 3}));
  CHECK(chain3().opens() == fam({0, 1, 3, 7}));
  CHECK(chain3().ground().labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(discrete(3).opens().size() == 8);
  CHECK(indiscrete(3).opens().size() == 2);
  CHECK(sierpinski().minimal_neighbourhood(1).bits() == 3);
}
