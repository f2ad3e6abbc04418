#include <doctest.h>

#include <filesystem>

#include "topolab/harness.hpp"

using namespace topolab;
using namespace topolab::fixtures;
using O = OperationName;

namespace {

const std::filesystem::path kData = TOPOLAB_TEST_DATA;

std::string strip_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string error_of(std::string_view json) {
  try {
    (void)parse_space(json);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("space fixtures parse") {
  CHECK(load_space(kData / "s2.json") == sierpinski());
  CHECK(load_space(kData / "c3.json") == chain3());
}

TEST_CASE("chain space round-trips byte for byte") {
  const std::string golden = strip_newline(read_text_file(kData / "c3.json"));
  CHECK(emit_space(parse_space(golden)) == golden);
  CHECK(emit_space(chain3()) == golden);
}

TEST_CASE("emitted spaces re-parse to themselves") {
  for (int n = 0; n <= 3; ++n) {
    for_each_topology(n, [&](const Topology& t) {
      const std::string text = emit_space(t);
      CHECK(emit_space(parse_space(text)) == text);
      CHECK(parse_space(text) == t);
    });
  }
}

TEST_CASE("space schema errors") {
  CHECK(error_of(read_text_file(kData / "missing_universe.json")).find("whole space") != std::string::npos);
  CHECK(error_of(R"({"points":["a"]})").find("opens") != std::string::npos);
  CHECK(error_of(R"({"points":["a"],"opens":[[],["b"],["a"]]})").find("opens[1][0]") != std::string::npos);
  CHECK(error_of("{\n  \"points\": [\"a\",]\n}").find("line 2") != std::string::npos);
  const std::string pair_error =
      error_of(R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]})");
  CHECK(pair_error.find("{a}") != std::string::npos);
  CHECK(pair_error.find("{b}") != std::string::npos);
  CHECK(error_of(R"({"points":["a","a"],"opens":[]})").find("duplicate") != std::string::npos);
}

TEST_CASE("operation files") {
  const Topology c3 = chain3();
  for (O name : kCatalog) {
    const Operation op = builtin(c3, name);
    const Operation back = parse_operation(c3, emit_operation(op));
    CHECK(back == op);
    CHECK(emit_operation(back) == emit_operation(op));
  }
  CHECK_THROWS_AS(parse_operation(c3, R"({"name":"f","table":{"[]":[]}})"), SchemaError);
  std::string text = emit_operation(builtin(c3, O::identity));
  const std::string key = R"("[\"a\"]":["a"])";
  const auto at = text.find(key);
  REQUIRE(at != std::string::npos);
  text.replace(at, key.size(), R"("[\"a\"]":[])");
  try {
    (void)parse_operation(c3, text);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("{a}") != std::string::npos);
  }
}

TEST_CASE("point lists and pair specs") {
  const Topology c3 = chain3();
  CHECK(parse_point_list(c3.ground(), "a,c").bits() == 0b101);
  CHECK(parse_point_list(c3.ground(), "").empty());
  CHECK_THROWS_AS(parse_point_list(c3.ground(), "a,z"), SchemaError);
  CHECK(resolve_pair(c3, "int,cl").label() == "int,cl");
  CHECK(resolve_pair(c3, "iota,scl").phi1() == builtin(c3, O::identity));
  CHECK_THROWS_AS(resolve_pair(c3, "int"), UsageError);
  CHECK_THROWS_AS(resolve_pair(c3, "int,foo"), UsageError);
}

TEST_CASE("config parsing") {
  const SuiteConfig d = parse_config("{}");
  CHECK(d.n_exhaustive == 3);
  CHECK(d.n_sampled == 6);
  CHECK(d.pairs.size() == 49);
  CHECK(d.suites == suite_names());
  const SuiteConfig c = parse_config(R"({"pairs":["int,cl","iota,scl"],"suites":["set_class_chain"],"seed":9})");
  CHECK(c.pairs.size() == 2);
  CHECK(c.pairs[1] == PairSpec{O::identity, O::scl});
  CHECK(c.seed == 9);
  CHECK_THROWS_AS(parse_config(R"({"n_exhaustive":5})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"n_sampled":17})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"suites":["nope"]})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"pairs":["int,nope"]})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"bogus":1})"), UsageError);
  CHECK_THROWS_AS(parse_config("[1"), UsageError);
}

TEST_CASE("sweep universe sizes") {
  SuiteConfig cfg;
  cfg.samples = 0;
  cfg.n_exhaustive = 3;
  CHECK(sweep_spaces(cfg).size() == 34);
  cfg.n_exhaustive = 2;
  CHECK(sweep_spaces(cfg).size() == 5);
  cfg.samples = 4;
  const auto spaces = sweep_spaces(cfg);
  CHECK(spaces.size() == 9);
  CHECK(spaces.back().id == "r6-003");
  CHECK(spaces.back().topology.size() == 6);
}

TEST_CASE("empty suite list gives an empty clean report") {
  SuiteConfig cfg = parse_config(R"({"suites":[]})");
  const Report r = run_suites(cfg);
  CHECK(r.suites.empty());
  CHECK(r.total_failures() == 0);
  const auto doc = nlohmann::json::parse(emit_report(r));
  CHECK(doc["suites"].empty());
  CHECK(doc["environment"]["version"] == std::string(kVersion));
}

TEST_CASE("small sweep is clean and independent of thread count") {
  SuiteConfig cfg = parse_config(read_text_file(kData / "small_config.json"));
  cfg.threads = 1;
  const std::string one = emit_report(run_suites(cfg));
  cfg.threads = 3;
  const std::string three = emit_report(run_suites(cfg));
  CHECK(one == three);
  const auto doc = nlohmann::json::parse(one);
  CHECK(doc["total_failures"] == 0);
  CHECK(doc["spaces"] == 7);
  CHECK(doc["suites"].size() == suite_names().size());
  for (const auto& s : doc["suites"]) CHECK(s["instances_checked"].get<std::uint64_t>() > 0);
}

TEST_CASE("a single input space can be swept") {
  SuiteConfig cfg = parse_config(R"({"suites":["phi12_structure","compactness_characterizations"]})");
  const Report r = run_suites(cfg, {SweepSpace{"c3", chain3()}});
  CHECK(r.spaces == 1);
  CHECK(r.total_failures() == 0);
  CHECK(r.find("phi12_structure")->instances_checked > 0);
  CHECK(r.find("missing") == nullptr);
}

TEST_CASE("miner targets") {
  CHECK(parse_mine_target("lemma21_converse") == MineTarget::open_family_converse);
  CHECK(parse_mine_target("thm311_hypothesis_failure") == MineTarget::additivity_failure);
  CHECK_FALSE(parse_mine_target("nothing"));

  const auto converse = mine_counterexamples(MineTarget::open_family_converse, 2);
  bool found = false;
  for (const auto& w : converse) {
    const auto& d = w.detail;
    if (d["pair"] == "cloint,sint" && d["space"]["opens"] == nlohmann::json::parse(R"([[],["0"],["0","1"]])"))
      found = true;
  }
  CHECK(found);

  const auto nonregular = mine_counterexamples(MineTarget::nonregular_pair, 3);
  const auto family = nlohmann::json::parse(R"([["0","1"],["1","2"],["0","1","2"]])");
  found = false;
  for (const auto& w : nonregular)
    if (w.detail["kind"] == "family" && w.detail["operation"] == "identity" && w.detail["family"] == family)
      found = true;
  CHECK(found);

  CHECK_THROWS_AS(mine_counterexamples(MineTarget::nonregular_pair, 5), UsageError);
}
