#pragma once
//
// Randomized verification suites. Each suite samples tuples, evaluates a
// fixed family of inequality/equality claims and records the slack of every
// instance. Claims whose larger side is an optimized supremum are checked with
// an asymmetric slack and, on apparent failure, recomputed with an escalated
// optimizer before a violation is declared.
//

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphertrans/optimize.hpp"
#include "sphertrans/random.hpp"

namespace sphertrans {

enum class Status { Pass, RefinedPass, Fail };
std::string_view to_string(Status s);

/// How a claim is judged.
///   Exact:       lhs ≤ rhs within tol·(1 + max(|lhs|,|rhs|))
///   Optimized:   rhs is a sup estimate; lhs ≤ rhs + slack·(1 + |rhs|), escalated on failure
///   Equality:    |lhs − rhs| ≤ tol
///   Statistical: per-instance pass means a strict gap; the claim holds when
///                at least `required_fraction` of instances pass
enum class ClaimKind { Exact, Optimized, Equality, Statistical };
std::string_view to_string(ClaimKind k);

struct ClaimInfo {
  std::string_view id;
  std::string_view suite;
  ClaimKind kind;
  std::string_view statement;
};

/// Every claim any suite can emit, keyed by id.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(std::string_view id);

inline constexpr double kStatisticalFraction = 0.95;

struct Fingerprint {
  std::uint64_t seed = 0;  // per-trial seed
  int trial = 0;
  std::string ensemble;
  int d = 0;
  int n = 0;
  std::optional<double> t;
  std::optional<double> lambda;
  std::optional<double> p;
  std::optional<double> r;  // exponent of power-sum checks
};

struct InequalityRecord {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs − lhs; −|lhs − rhs| for equalities
  Status status = Status::Pass;
  Fingerprint fingerprint;
};

struct InequalitySummary {
  std::string id;
  ClaimKind kind = ClaimKind::Exact;
  long count = 0;
  long pass = 0;  // includes refined passes
  long refined_pass = 0;
  long fail = 0;
  double min_slack = 0.0;
  Fingerprint min_slack_at;
  /// Only meaningful for statistical claims.
  double pass_fraction = 1.0;
  bool criterion_met = true;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = 0.0;
  double optimized_slack = 0.0;
  int dmax = 0;
  int nmax = 0;
  std::vector<InequalityRecord> records;
  std::vector<InequalitySummary> summary;
  double wall_seconds = 0.0;

  /// Failed instances of non-statistical claims plus statistical claims
  /// below their required fraction.
  long violations() const;
  bool passed() const { return violations() == 0; }
  const InequalitySummary* find(std::string_view id) const;
};

struct SuiteConfig {
  int trials = 100;
  std::uint64_t seed = 42;
  int dmax = 4;
  int nmax = 6;
  double tol = 1e-8;
  double optimized_slack = 1e-6;
  /// 0 → SPHERTRANS_WORKERS, else the hardware thread count.
  unsigned workers = 0;
  std::optional<Ensemble> ensemble;
  /// When set, only claims with this id are evaluated.
  std::string only_id;
  OptimizerConfig optimizer;
};

/// Reads SPHERTRANS_WORKERS; falls back to std::thread::hardware_concurrency.
unsigned default_worker_count();

SuiteReport suite_section2(const SuiteConfig& config);
SuiteReport suite_section3(const SuiteConfig& config);
SuiteReport suite_section4(const SuiteConfig& config);
SuiteReport equality_case_check(const SuiteConfig& config);
SuiteReport zero_equivalence_check(const SuiteConfig& config);
SuiteReport sharpness_examples(const SuiteConfig& config = {});

inline constexpr std::string_view kSuiteNames[] = {"s2", "s3", "s4", "equality", "sharpness", "zero"};

/// Dispatch by suite name ("s2", "s3", "s4", "equality", "sharpness", "zero").
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

/// Recomputes the summary from the records.
void summarize(SuiteReport& report);

struct SlackHistogram {
  /// Bin edges on relative slack rhs−lhs over (1+|rhs|); the first bin
  /// collects negative slack.
  std::vector<double> edges;
  std::map<std::string, std::vector<long>> counts;
};

SlackHistogram tightness_stats(const SuiteReport& report);

struct FuzzResult {
  SuiteReport report;
  std::optional<InequalityRecord> witness_record;
  std::optional<OperatorTuple> witness;
  SlackHistogram histogram;
};

/// Runs the suite that owns `id` restricted to that claim and keeps the
/// subject (tuple, or (A, B, X) for matrix claims) of the minimal-slack
/// instance.
FuzzResult fuzz(std::string_view id, const SuiteConfig& config);

/// JSON serialization; `include_wall_time = false` gives byte-identical
/// output for identical inputs.
std::string report_to_json(const SuiteReport& report, bool include_wall_time = true);
std::string histogram_to_json(const SlackHistogram& histogram);

}  // namespace sphertrans
