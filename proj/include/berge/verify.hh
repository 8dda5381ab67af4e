#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/constructions.hh"
#include "berge/cycle.hh"
#include "berge/cycle_search.hh"
#include "berge/enumerate.hh"
#include "berge/predicates.hh"

namespace berge {

enum class Verdict { hypotheses_not_met, pass, fail, undecided };
const char* to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::hypotheses_not_met;
  std::string reason;
  /// A cycle meeting the target when the verdict is pass.
  std::optional<AltCycle> witness;
  std::int64_t nodes = 0;
};

/// Tests the hypotheses (k-connectivity, X-degrees >= delta, the degree
/// bound) and then the conclusion. delta defaults to the minimum X-degree.
/// A fail is confirmed by a second exact solver with no budget; budget
/// exhaustion gives undecided, never pass.
CheckResult check_graph(const BipartiteGraph& g, const PredicateConfig& cfg,
                        std::optional<int> delta = std::nullopt,
                        std::int64_t budget = kDefaultBudget);

struct Tally {
  std::int64_t examined = 0;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t not_met = 0;
  std::int64_t undecided = 0;

  void add(Verdict v);
  Tally& operator+=(const Tally& o);
  bool operator==(const Tally&) const = default;
};

struct VerifyOptions {
  int n_lo = 0, n_hi = 0;
  int m_lo = 0, m_hi = 0;
  int delta = 0;
  PredicateConfig config = make_predicate("three_conn_quarter");
  /// Rows fixed per shard.
  int shard_depth = 1;
  int jobs = 1;
  /// Solver node budget per graph.
  std::int64_t budget = kDefaultBudget;
  /// Progress file; read on start when present, rewritten as shards advance.
  std::string resume_path;
  /// JSON-lines findings log; failures always, every graph at verbosity >= 2.
  std::string log_path;
  /// Canonical encodings of undecided graphs, one per record.
  std::string retry_path;
  int verbosity = 0;
  /// Stop after examining this many graphs in this run (negative: no limit).
  std::int64_t stop_after = -1;
  /// Spaces with a larger estimated class count are sampled instead.
  double exhaustive_limit = 1e7;
  int estimate_probes = 64;
  std::int64_t fallback_samples = 10000;
  std::uint64_t seed = 1;
};

struct SpaceReport {
  int n = 0, m = 0, delta = 0;
  /// The degree bound fails for (n, m, delta): no graph can meet the
  /// hypotheses, nothing is enumerated.
  bool vacuous = false;
  bool sampled = false;
  double estimate = 0;
  bool complete = false;
  Tally tally;
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::vector<SpaceReport> spaces;
  Tally total;
  bool complete = true;
  std::vector<std::string> failures;
  std::vector<std::string> notices;
};

VerifyReport verify_theorem(const VerifyOptions& opt);
std::string format_report(const VerifyReport& r);

struct HuntOptions {
  int n = 0;
  int m_lo = 0, m_hi = 0;
  int delta = 0;
  PredicateConfig config = make_predicate("three_conn_quarter");
  /// Graphs meeting the hypotheses to check.
  std::int64_t samples = 0;
  /// Draws allowed in total; 0 means 100 * samples.
  std::int64_t max_attempts = 0;
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string log_path;
  int verbosity = 0;
};

struct HuntReport {
  std::int64_t attempts = 0;
  std::int64_t accepted = 0;
  Tally tally;
  std::vector<std::string> failures;
};

/// Random graph whose X-neighbourhoods are uniform subsets of uniform size
/// in [delta, m].
BipartiteGraph sample_graph(int n, int m, int delta, std::uint64_t seed);

/// Rejection sampling: draws graphs until `samples` meet the hypotheses,
/// checks each. Draw i uses a seed derived from (seed, i), so results do not
/// depend on `jobs`.
HuntReport hunt(const HuntOptions& opt);
std::string format_report(const HuntReport& r);

/// n split into `parts` non-increasing parts differing by at most one.
std::vector<int> balanced_parts(int n, int parts);

struct SharpnessReport {
  GkParams params;
  int n = 0;
  int m = 0;
  /// Largest m the k-connected bound allows: (k+1)(delta-k)+k-1.
  int bound_m = 0;
  int min_x_degree = 0;
  int connectivity = 0;
  bool k_connected = false;
  SearchStatus spanning = SearchStatus::budget_exceeded;
  /// Longest cycle length; exact when longest_exact.
  int longest = 0;
  bool longest_exact = false;
  bool witness = false;
};

/// Builds G_k(parts; delta) (parts default to balanced_parts(delta, k+1))
/// and measures it. A witness is k-connected with delta >= n, m = bound_m+1
/// and no X-spanning cycle.
SharpnessReport sharpness_report(int k, int delta, std::vector<int> parts = {},
                                 std::int64_t budget = kDefaultBudget);
std::string format_report(const SharpnessReport& r);

}  // namespace berge
