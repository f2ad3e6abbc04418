#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "topolab/ops.hpp"

using namespace topolab;
using namespace topolab::fixtures;
using O = OperationName;

namespace {

Family fam(std::initializer_list<Mask> masks) {
  std::vector<Subset> v;
  for (Mask m : masks) v.emplace_back(m);
  return Family(std::move(v));
}

std::vector<Subset> table_of(const Topology& t, const std::function<Subset(Subset)>& f) {
  std::vector<Subset> out(t.ground().subset_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(Subset(static_cast<Mask>(i)));
  return out;
}

}  // namespace

TEST_CASE("operation names") {
  for (O n : kCatalog) CHECK(parse_operation_name(to_string(n)) == n);
  CHECK(parse_operation_name("iota") == O::identity);
  CHECK_FALSE(parse_operation_name("closure"));
}

TEST_CASE("builtin tabulation examples") {
  const Topology s2 = sierpinski();
  const Topology c3 = chain3();
  CHECK(builtin(s2, O::scl)(Subset(0b10)).bits() == 0b10);
  CHECK(builtin(c3, O::cloint)(Subset(0b101)) == c3.universe());
  for (int n = 0; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      CHECK(builtin(t, O::introcl)(Subset{}).empty());
    });
  }
}

TEST_CASE("builtin tables match the oracle on every small space") {
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const oracle::Sets opens = oracle::to_sets(t.opens());
      for (O name : kCatalog) {
        const Operation op = builtin(t, name);
        const oracle::Op ref = oracle::op_by_name(opens, n, std::string(to_string(name)));
        for (Mask a = 0; a <= oracle::full(n); ++a) CHECK(op(Subset(a)).bits() == ref(a));
        CHECK(oracle::to_sets(phi_open_family(op)) == oracle::open_family(ref, n));
      }
    });
  }
}

TEST_CASE("is_operation examples") {
  const Topology d2 = discrete(2);
  CHECK(is_operation(d2, builtin(d2, O::identity).table()));
  auto bad = table_of(d2, [](Subset a) { return a; });
  bad[1] = Subset{};
  CHECK_FALSE(is_operation(d2, bad));
  const auto v = check_operation(d2, bad);
  REQUIRE(v);
  CHECK(v->kind == OperationViolation::Kind::interior_not_contained);
  CHECK(v->witness.bits() == 1);
  CHECK_THROWS_AS(Operation(d2, bad, "bad"), SchemaError);

  auto constant = table_of(d2, [&](Subset a) { return a.empty() ? a : d2.universe(); });
  CHECK(is_operation(d2, constant));
  auto nonempty = constant;
  nonempty[0] = Subset(1);
  CHECK(check_operation(d2, nonempty)->kind == OperationViolation::Kind::empty_not_fixed);
  CHECK(check_operation(d2, std::vector<Subset>(3))->kind == OperationViolation::Kind::wrong_size);
}

TEST_CASE("dual is an involution and pairs the catalog") {
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      for (O name : kCatalog) CHECK(dual(dual(builtin(t, name))) == builtin(t, name));
      CHECK(dual(builtin(t, O::interior)) == builtin(t, O::closure));
      CHECK(dual(builtin(t, O::cloint)) == builtin(t, O::introcl));
      CHECK(dual(builtin(t, O::scl)) == builtin(t, O::sint));
      CHECK(dual(builtin(t, O::identity)) == builtin(t, O::identity));
    });
  }
  // The dual of a map that is not extensive enough fails validation.
  const Topology d2 = discrete(2);
  const Operation x_everywhere(d2, table_of(d2, [&](Subset a) { return a.empty() ? a : d2.universe(); }), "top");
  CHECK_THROWS_AS(dual(x_everywhere), SchemaError);
}

TEST_CASE("leq examples") {
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      CHECK(leq(builtin(t, O::interior), builtin(t, O::cloint)));
      CHECK(leq(builtin(t, O::cloint), builtin(t, O::closure)));
      for (O name : kCatalog) CHECK(leq(builtin(t, name), builtin(t, name)));
    });
  }
  const Topology s2 = sierpinski();
  CHECK_FALSE(leq(builtin(s2, O::cloint), builtin(s2, O::sint)));
  CHECK(builtin(s2, O::cloint)(Subset(1)) == s2.universe());
  CHECK(builtin(s2, O::sint)(Subset(1)).bits() == 1);
  CHECK_THROWS_AS(leq(builtin(s2, O::identity), builtin(chain3(), O::identity)), UsageError);
}

TEST_CASE("is_monotone examples") {
  for (int n = 1; n <= 4; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      CHECK(is_monotone(builtin(t, O::closure)));
      CHECK(is_monotone(builtin(t, O::scl)));
    });
  }
  const Topology d2 = discrete(2);
  auto table = table_of(d2, [](Subset a) { return a; });
  table[1] = d2.universe();
  table[3] = d2.universe();
  CHECK(is_monotone(Operation(d2, table, "jump")));
  // Literal brute-force check of monotonicity against the single-point test.
  std::mt19937_64 rng(5);
  const Topology c3 = chain3();
  for (int trial = 0; trial < 200; ++trial) {
    auto t = table_of(c3, [&](Subset a) {
      return a.empty() ? a : (c3.interior(a) | (Subset(static_cast<Mask>(rng())) & c3.universe()));
    });
    const Operation op(c3, t, "random");
    bool literal = true;
    for (Mask a = 0; a < 8; ++a)
      for (Mask b = 0; b < 8; ++b)
        if ((a & ~b) == 0 && !op(Subset(a)).subset_of(op(Subset(b)))) literal = false;
    CHECK(is_monotone(op) == literal);
  }
}

TEST_CASE("non-monotone operation on three discrete points") {
  const Topology d3 = discrete(3);
  auto table = table_of(d3, [](Subset a) { return a; });
  table[0b001] = Subset(0b011);
  const Operation op(d3, table, "jump");
  CHECK_FALSE(is_monotone(op));
  CHECK_FALSE(op(Subset(0b001)).subset_of(op(Subset(0b101))));
}

TEST_CASE("open and closed families") {
  const Topology s2 = sierpinski();
  CHECK(phi_open_family(builtin(s2, O::cloint)) == fam({0, 1, 3}));
  CHECK(phi_open_family(builtin(s2, O::introcl)) == fam({0, 1, 3}));
  CHECK(phi_open_family(builtin(s2, O::identity)) == all_subsets(2));
  CHECK(phi_closed_family(builtin(s2, O::interior)) == fam({0, 2, 3}));
}

TEST_CASE("regularity examples") {
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      CHECK(is_regular_wrt(builtin(t, O::closure), t.opens()));
      for (O name : kCatalog) CHECK(is_regular_wrt(builtin(t, name), fam({static_cast<Mask>(t.universe().bits())})));
    });
  }
  const Topology d3 = discrete(3);
  const Family f = fam({0b011, 0b110, 0b111});
  CHECK_FALSE(is_regular_wrt(builtin(d3, O::identity), f));
  const auto v = find_regularity_violation(builtin(d3, O::identity), f);
  REQUIRE(v);
  CHECK(v->point == 1);
  CHECK(v->first.bits() == 0b011);
  CHECK(v->second.bits() == 0b110);
}

TEST_CASE("regularity matches the literal definition") {
  // x ∈ U ∩ V for U, V in the family needs W in the family with x ∈ W and
  // φ(W) ⊂ φ(U) ∩ φ(V).
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Subset> members{t.universe()};
        for (int k = 0; k < 3; ++k) members.emplace_back(static_cast<Mask>(rng()) & t.universe().bits());
        const Family f(members);
        for (O name : kCatalog) {
          const Operation op = builtin(t, name);
          bool literal = true;
          for (Subset u : f)
            for (Subset v : f)
              for (int x = 0; x < n; ++x) {
                if (!u.contains(x) || !v.contains(x)) continue;
                bool found = false;
                for (Subset w : f)
                  if (w.contains(x) && op(w).subset_of(op(u) & op(v))) found = true;
                literal = literal && found;
              }
          CHECK(is_regular_wrt(op, f) == literal);
        }
      }
    });
  }
}

TEST_CASE("neighborhoods examples") {
  const Topology s2 = sierpinski();
  CHECK(neighborhoods(s2.opens(), 0, s2.universe()) == fam({1, 3}));
  CHECK(neighborhoods(s2.opens(), 1, s2.universe()) == fam({3}));
  CHECK(neighborhoods(fam({1}), 1, s2.universe()).empty());
}
