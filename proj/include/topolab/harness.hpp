#pragma once

// Property-suite runner and counterexample miner.
//
// run_suites sweeps every topology on 1..n_exhaustive points plus `samples`
// seeded random spaces on n_sampled points, evaluates each suite's
// hypotheses and, where they hold, asserts the conclusion. Work is split by
// space across threads; results are merged in space order, so the report
// does not depend on the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topolab/compact.hpp"
#include "topolab/io.hpp"

namespace topolab {

inline constexpr std::string_view kVersion = "1.0.0";

using PairSpec = std::pair<OperationName, OperationName>;

/// All 49 ordered pairs of catalog operations.
std::vector<PairSpec> catalog_pairs();

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  int n_exhaustive = 3;
  int n_sampled = 6;
  int samples = 10;
  std::uint64_t seed = 1;
  std::vector<PairSpec> pairs = catalog_pairs();
  std::vector<std::string> suites = suite_names();
  /// Subsets quantified per sampled space above four points.
  int subset_samples = 16;
  int random_families = 24;
  /// 0: TOPOLAB_THREADS or the hardware concurrency.
  int threads = 0;
};

/// Throws UsageError on unknown keys, suites, operations or out-of-range
/// sizes (n_exhaustive <= 4, n_sampled <= 16).
SuiteConfig parse_config(std::string_view json_text);

struct Failure {
  std::string space;
  std::string pair;
  std::string subject;
  std::vector<std::string> statements;
  std::string witness;

  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct SuiteReport {
  std::string name;
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_held = 0;
  std::vector<Failure> failures;
};

struct Report {
  SuiteConfig config;
  std::size_t spaces = 0;
  std::vector<SuiteReport> suites;

  std::size_t total_failures() const;
  const SuiteReport* find(std::string_view suite) const;
};

/// A space swept by the runner: stable id plus the topology.
struct SweepSpace {
  std::string id;
  Topology topology;
};

std::vector<SweepSpace> sweep_spaces(const SuiteConfig& cfg);

Report run_suites(const SuiteConfig& cfg);
/// Sweeps the given spaces instead of the configured universe.
Report run_suites(const SuiteConfig& cfg, const std::vector<SweepSpace>& spaces);

/// Canonical JSON with stable field order and a trailing newline.
std::string emit_report(const Report& report);

int resolve_thread_count(int requested);

// ---------------------------------------------------------------------------

enum class MineTarget {
  open_family_converse,  // φ1O ⊂ φ2O without φ1 ≤ φ2 or ι ≤ φ2
  compactness_strictness,
  nonregular_pair,
  additivity_failure,
};

/// Accepts the descriptive names above and the CLI tokens
/// lemma21_converse, thm32_strictness, nonregular_pair,
/// thm311_hypothesis_failure.
std::optional<MineTarget> parse_mine_target(std::string_view text);
std::string_view to_string(MineTarget target);

struct MineWitness {
  std::string space;
  ordered_json detail;
};

/// Sweeps every topology on 1..n_max points (n_max <= 4; explicit-family
/// regularity witnesses stop at 3 points). Output order is canonical.
std::vector<MineWitness> mine_counterexamples(MineTarget target, int n_max);

}  // namespace topolab
