#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sphertrans/harness.hpp"

namespace sphertrans::detail {

/// A supremum estimate computed on first use, with a cached escalated rerun.
class LazySup {
 public:
  using Fn = std::function<double(const OptimizerConfig&)>;
  LazySup(Fn fn, OptimizerConfig base) : fn_(std::move(fn)), base_(base) {}

  double value();
  /// max(value, rerun with base.escalated()), so escalation never lowers
  /// a lower bound.
  double escalated();

 private:
  Fn fn_;
  OptimizerConfig base_;
  std::optional<double> value_;
  std::optional<double> escalated_;
};

class TrialContext {
 public:
  TrialContext(const SuiteConfig& config, int trial, bool keep_subjects);

  Rng rng;
  Fingerprint fingerprint;
  const SuiteConfig& config;
  /// Optimizer settings for this trial; the seed is derived from the trial seed.
  OptimizerConfig optimizer;

  bool wants(std::string_view id) const;
  void set_subject(const OperatorTuple& t);

  LazySup sup(LazySup::Fn fn) const { return LazySup(std::move(fn), optimizer); }

  /// lhs ≤ rhs within tol·(1 + max(|lhs|, |rhs|)).
  void exact(std::string_view id, double lhs, double rhs);
  /// lhs ≤ rhs + slack·(1 + |rhs|); on failure rhs is recomputed with
  /// `escalate` and the record becomes refined-pass or fail.
  void optimized(std::string_view id, double lhs, double rhs, const std::function<double()>& escalate);
  /// |lhs − rhs| ≤ tol; `escalate` (if any) returns both sides recomputed.
  void equality(std::string_view id, double lhs, double rhs, double tol,
                const std::function<std::pair<double, double>()>& escalate = {});
  /// lhs ≤ rhs with no tolerance, for absolute thresholds.
  void at_most(std::string_view id, double lhs, double rhs);
  /// Per-instance pass iff rhs − lhs > gap.
  void strict_gap(std::string_view id, double lhs, double rhs, double gap);

  std::vector<InequalityRecord> records;
  std::vector<std::optional<OperatorTuple>> subjects;

 private:
  void push(std::string_view id, double lhs, double rhs, double slack, Status status);

  bool keep_subjects_;
  std::optional<OperatorTuple> subject_;
};

using TrialFn = std::function<void(TrialContext&)>;

struct TrialResults {
  std::vector<InequalityRecord> records;
  std::vector<std::optional<OperatorTuple>> subjects;
};

/// Runs trials 0..count−1 on the worker pool and concatenates their records
/// in trial order.
TrialResults run_trials(const SuiteConfig& config, int count, const TrialFn& fn, bool keep_subjects);

SuiteReport make_report(std::string_view suite, const SuiteConfig& config, TrialResults results,
                        double wall_seconds);

/// Suite bodies shared by the public suite functions and fuzz.
TrialFn section2_trial();
TrialFn section3_trial();
TrialFn section4_trial();
TrialFn equality_trial();
TrialFn zero_trial();
TrialFn sharpness_trial();
int sharpness_trial_count();

}  // namespace sphertrans::detail
