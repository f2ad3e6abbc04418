#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topolab/harness.hpp"

using namespace topolab;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string family_line(const GroundSet& g, const Family& f) {
  std::string out;
  for (Subset s : f) {
    if (!out.empty()) out += ' ';
    out += g.format(s);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int cmd_enumerate(int n, const std::string& out_path) {
  if (n < 0 || n > kMaxExhaustivePoints) throw UsageError("--n must lie in [0, 4]");
  std::string text;
  for_each_topology(n, [&](const Topology& t) { text += emit_space(t) + "\n"; });
  emit(text, out_path);
  return kExitClean;
}

int cmd_check(const std::string& config_path, const std::string& space_path, const std::string& out_path,
              int threads) {
  SuiteConfig cfg = parse_config(read_text_file(config_path));
  if (threads > 0) cfg.threads = threads;
  Report report = space_path.empty() ? run_suites(cfg) : run_suites(cfg, {SweepSpace{"input", load_space(space_path)}});
  emit(emit_report(report), out_path);
  const std::size_t failures = report.total_failures();
  if (failures > 0) std::cerr << "topolab: " << failures << " property failure(s)\n";
  return failures == 0 ? kExitClean : kExitFailure;
}

int cmd_families(const std::string& space_path, const std::string& pair) {
  const Topology t = load_space(space_path);
  const OpPair p = resolve_pair(t, pair);
  const GroundSet& g = t.ground();
  std::cout << "phi1_open: " << family_line(g, p.phi1_open()) << "\n";
  std::cout << "phi2_open: " << family_line(g, phi_open_family(p.phi2())) << "\n";
  std::cout << "phi12_open: " << family_line(g, phi12_open_family(p)) << "\n";
  std::cout << "phi12_closed: " << family_line(g, phi12_closed_family(p)) << "\n";
  std::cout << "enlargement_base: " << family_line(g, enlargement_base(p)) << "\n";
  const StructureReport s = classify_structure(p);
  std::cout << "supratopology: " << s.is_supratopology << "\n";
  std::cout << "topology: " << s.is_topology << "\n";
  std::cout << "kuratowski: " << s.is_kuratowski << "\n";
  return kExitClean;
}

int cmd_filter(const std::string& space_path, const std::string& pair, const std::string& core, bool report) {
  const Topology t = load_space(space_path);
  const OpPair p = resolve_pair(t, pair);
  const GroundSet& g = t.ground();
  const Subset c = parse_point_list(g, core);
  if (c.empty()) throw UsageError("--core must name at least one point");
  const Filter f(c);
  std::cout << "core: " << g.format(c) << "\n";
  std::cout << "limit_set: " << g.format(limit_set(f, p)) << "\n";
  std::cout << "adherence_set: " << g.format(adherence_set(f, p)) << "\n";
  if (report) {
    std::cout << "regular: " << is_regular_wrt(p.phi2(), p.phi1_open()) << "\n";
    std::cout << "t2: " << is_t2(p) << "\n";
    for (int a = 0; a < t.size(); ++a) {
      std::cout << g.label(a) << ": converges=" << converges(f, p, a) << " accumulates=" << accumulates(f, p, a)
                << "\n";
    }
  }
  return kExitClean;
}

int cmd_compact(const std::string& space_path, const std::string& pair, const std::string& set, bool oracle) {
  const Topology t = load_space(space_path);
  const OpPair p = resolve_pair(t, pair);
  const GroundSet& g = t.ground();
  const Subset a = parse_point_list(g, set);
  const CoverSystem cs = cover_system(p, CompactnessKind::phi12);
  const CompactnessVerdict v = is_compact(cs, a);
  std::cout << "set: " << g.format(a) << "\n";
  std::cout << "compact: " << v.compact << "\n";
  if (!v.compact) {
    std::cout << "witness_point: " << g.label(*v.witness_point) << "\n";
    std::cout << "witness_cover: " << family_line(g, *v.witness_cover) << "\n";
  }
  std::cout << "phi12_open_compact: " << compactness_kind(p, a, CompactnessKind::phi12_open) << "\n";
  std::cout << "base_compact: " << compactness_kind(p, a, CompactnessKind::base) << "\n";
  if (oracle) {
    const bool brute = brute_force_compact(cs, a);
    std::cout << "oracle: " << brute << "\n";
    if (brute != v.compact) {
      std::cerr << "topolab: fast criterion disagrees with the brute-force oracle\n";
      return kExitFailure;
    }
  }
  return kExitClean;
}

int cmd_mine(const std::string& target_name, int n_max) {
  const auto target = parse_mine_target(target_name);
  if (!target) throw UsageError("unknown mine target '" + target_name + "'");
  for (const MineWitness& w : mine_counterexamples(*target, n_max)) {
    ordered_json line;
    line["id"] = w.space;
    for (auto& [k, v] : w.detail.items()) line[k] = v;
    std::cout << line.dump() << "\n";
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-space operator calculus: enumeration, property suites and counterexample mining"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int n = 0;
  std::string out_path, config_path, space_path, pair, core, set, target;
  int n_max = 3;
  int threads = 0;
  bool report = false, oracle = false;

  auto* enumerate = app.add_subcommand("enumerate", "Write every topology on n points as JSON lines");
  enumerate->add_option("--n", n, "Number of points (0..4)")->required();
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Run the property suites and emit a JSON report");
  check->add_option("--config", config_path, "Suite configuration JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--space", space_path, "Sweep only this space")->check(CLI::ExistingFile);
  check->add_option("--out", out_path, "Report file (default stdout)");
  check->add_option("--threads", threads, "Worker threads (default TOPOLAB_THREADS or all cores)");

  auto* families = app.add_subcommand("families", "Print the families induced by an operation pair");
  families->add_option("--space", space_path, "Space JSON")->required()->check(CLI::ExistingFile);
  families->add_option("--pair", pair, "<op>,<op> with builtin names or custom:<file>")->required();

  auto* filter = app.add_subcommand("filter", "Limit and adherence sets of a principal filter");
  filter->add_option("--space", space_path, "Space JSON")->required()->check(CLI::ExistingFile);
  filter->add_option("--pair", pair, "<op>,<op>")->required();
  filter->add_option("--core", core, "Core points, comma separated")->required();
  filter->add_flag("--report", report, "Per-point convergence and accumulation");

  auto* compact = app.add_subcommand("compact", "Compactness verdict with witness");
  compact->add_option("--space", space_path, "Space JSON")->required()->check(CLI::ExistingFile);
  compact->add_option("--pair", pair, "<op>,<op>")->required();
  compact->add_option("--set", set, "Points of the set, comma separated")->required();
  compact->add_flag("--oracle", oracle, "Cross-check with the brute-force evaluator");

  auto* mine = app.add_subcommand("mine", "Search enumerated spaces for counterexamples");
  mine->add_option("--target", target,
                   "lemma21_converse | thm32_strictness | nonregular_pair | thm311_hypothesis_failure")
      ->required();
  mine->add_option("--n-max", n_max, "Largest space size (<= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(n, out_path);
    if (*check) return cmd_check(config_path, space_path, out_path, threads);
    if (*families) return cmd_families(space_path, pair);
    if (*filter) return cmd_filter(space_path, pair, core, report);
    if (*compact) return cmd_compact(space_path, pair, set, oracle);
    if (*mine) return cmd_mine(target, n_max);
  } catch (const Error& e) {
    std::cerr << "topolab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "topolab: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
