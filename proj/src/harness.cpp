#include "sphertrans/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "sphertrans/error.hpp"
#include "trial.hpp"

namespace sphertrans {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::RefinedPass: return "refined-pass";
    case Status::Fail: return "fail";
  }
  return "?";
}

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Exact: return "exact";
    case ClaimKind::Optimized: return "optimized";
    case ClaimKind::Equality: return "equality";
    case ClaimKind::Statistical: return "statistical";
  }
  return "?";
}

const std::vector<ClaimInfo>& claim_registry() {
  using K = ClaimKind;
  static const std::vector<ClaimInfo> registry = {
      // operator norm
      {"op.heinz.le_r0_mix", "s2", K::Exact, "‖T̂(t)‖ ≤ 2r₀‖T̃‖ + (1−2r₀)‖T̂‖"},
      {"op.r0_mix.le_mean", "s2", K::Exact, "2r₀‖T̃‖ + (1−2r₀)‖T̂‖ ≤ ‖T̂‖"},
      {"op.mean.le_norm", "s2", K::Exact, "‖T̂‖ ≤ ‖T‖"},
      {"op.aluthge.le_heinz", "s2", K::Exact, "‖T̃‖ ≤ ‖T̂(t)‖"},
      {"op.heinz.le_interp", "s2", K::Exact, "‖T̂(t)‖ ≤ ½(‖T^D‖ᵗ‖T‖^{1−t} + ‖T^D‖^{1−t}‖T‖ᵗ)"},
      {"op.interp.le_norm", "s2", K::Exact, "½(‖T^D‖ᵗ‖T‖^{1−t} + ‖T^D‖^{1−t}‖T‖ᵗ) ≤ ‖T‖"},
      {"op.duggal.le_norm", "s2", K::Exact, "‖T^D‖ ≤ ‖T‖"},
      {"op.lmean.lower", "s2", K::Exact, "2√(λ−λ²)‖T̃‖ ≤ ‖M_λ(T)‖"},
      {"op.lmean.upper", "s2", K::Exact, "‖M_λ(T)‖ ≤ λ‖T‖ + (1−λ)‖T^D‖"},
      {"op.lmean.convex_le_norm", "s2", K::Exact, "λ‖T‖ + (1−λ)‖T^D‖ ≤ ‖T‖"},
      {"norm.le_euclidean", "s2", K::Exact, "‖T‖ ≤ ‖T‖_e"},
      // hypo-norm
      {"hypo.heinz.le_r0_mix", "s2", K::Optimized, "‖T̂(t)‖_h ≤ 2r₀‖T̃‖_h + (1−2r₀)‖T̂‖_h"},
      {"hypo.r0_mix.le_mean", "s2", K::Optimized, "2r₀‖T̃‖_h + (1−2r₀)‖T̂‖_h ≤ ‖T̂‖_h"},
      {"hypo.mean.le_norm", "s2", K::Exact, "‖T̂‖_h ≤ ‖T‖"},
      {"hypo.lmean.lower", "s2", K::Optimized, "2√(λ−λ²)‖T̃‖_h ≤ ‖M_λ(T)‖_h"},
      {"hypo.lmean.upper", "s2", K::Optimized, "‖M_λ(T)‖_h ≤ λ‖T‖_h + (1−λ)‖T^D‖_h"},
      {"hypo.lmean.convex_le_norm", "s2", K::Exact, "λ‖T‖_h + (1−λ)‖T^D‖_h ≤ ‖T‖"},
      {"hypo.lower_bound", "s2", K::Optimized, "(1/√d)‖T‖ ≤ ‖T‖_h"},
      {"hypo.le_norm", "s2", K::Exact, "‖T‖_h ≤ ‖T‖"},
      // joint numerical radius
      {"nr.aluthge.le_heinz", "s2", K::Optimized, "ω(T̃) ≤ ω(T̂(t))"},
      {"nr.heinz.le_mean", "s2", K::Optimized, "ω(T̂(t)) ≤ ω(T̂)"},
      {"nr.lower_bound", "s2", K::Optimized, "(1/(2√d))‖T‖ ≤ ω(T)"},
      {"nr.le_hypo", "s2", K::Optimized, "ω(T) ≤ ‖T‖_h"},
      {"nr.le_norm", "s2", K::Exact, "ω(T) ≤ ‖T‖"},
      {"nr.le_euclidean", "s2", K::Exact, "ω(T) ≤ ‖T‖_e"},
      {"nr.routes_agree", "s2", K::Equality, "sup_x (Σ|⟨T_kx,x⟩|²)^{1/2} = sup_λ ω(Σλ_kT_k)"},
      // raw Heinz on matrices, operator norm and Schatten p
      {"heinz.geo_le_heinz.op", "s2", K::Exact, "2‖A^{½}XB^{½}‖ ≤ ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖"},
      {"heinz.heinz_le_sum.op", "s2", K::Exact, "‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖ ≤ ‖AX + XB‖"},
      {"heinz.refined.op", "s2", K::Exact, "‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖ ≤ 4r₀‖A^{½}XB^{½}‖ + (1−2r₀)‖AX+XB‖"},
      {"heinz.refined_le_sum.op", "s2", K::Exact, "4r₀‖A^{½}XB^{½}‖ + (1−2r₀)‖AX+XB‖ ≤ ‖AX+XB‖"},
      {"heinz.interp.op", "s2", K::Exact, "‖A^νXB^{1−ν}‖ ≤ ‖AX‖^ν‖XB‖^{1−ν}"},
      {"heinz.geo_le_heinz.p", "s2", K::Exact, "2‖A^{½}XB^{½}‖_p ≤ ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p"},
      {"heinz.heinz_le_sum.p", "s2", K::Exact, "‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p ≤ ‖AX + XB‖_p"},
      {"heinz.refined.p", "s2", K::Exact, "‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p ≤ 4r₀‖A^{½}XB^{½}‖_p + (1−2r₀)‖AX+XB‖_p"},
      {"heinz.refined_le_sum.p", "s2", K::Exact, "4r₀‖A^{½}XB^{½}‖_p + (1−2r₀)‖AX+XB‖_p ≤ ‖AX+XB‖_p"},
      {"heinz.interp.p", "s2", K::Exact, "‖A^νXB^{1−ν}‖_p ≤ ‖AX‖_p^ν‖XB‖_p^{1−ν}"},
      // Schatten p
      {"sp.lmean.bound", "s3", K::Exact, "‖M_λ(T)‖_{s,p} ≤ (λ + (1−λ)d^{1/p})‖T‖_{s,p}"},
      {"sp.duggal.bound", "s3", K::Exact, "‖T^D‖_{s,p} ≤ d^{1/p}‖T‖_{s,p}"},
      {"s2.duggal.sqrt_n", "s3", K::Exact, "‖T^D‖_{s,2} ≤ √n‖T‖_{s,2}"},
      {"s2.lmean.sqrt_min", "s3", K::Exact, "‖M_λ(T)‖_{s,2} ≤ (λ + (1−λ)√min(n,d))‖T‖_{s,2}"},
      {"sp.heinz.le_r0_mix", "s3", K::Exact, "‖T̂(t)‖_{s,p} ≤ 2r₀‖T̃‖_{s,p} + (1−2r₀)‖T̂‖_{s,p}"},
      {"sp.r0_mix.le_mean", "s3", K::Exact, "2r₀‖T̃‖_{s,p} + (1−2r₀)‖T̂‖_{s,p} ≤ ‖T̂‖_{s,p}"},
      {"sp.aluthge.le_heinz", "s3", K::Exact, "‖T̃‖_{s,p} ≤ ‖T̂(t)‖_{s,p}"},
      {"sp.heinz.le_mean", "s3", K::Exact, "‖T̂(t)‖_{s,p} ≤ ‖T̂‖_{s,p}"},
      {"sp.mean.bound", "s3", K::Exact, "‖T̂‖_{s,p} ≤ ((1 + d^{1/p})/2)‖T‖_{s,p}"},
      {"sp.heinz.le_interp", "s3", K::Exact,
       "‖T̂(t)‖_{s,p} ≤ ½(‖T^D‖_{s,p}ᵗ‖T‖_{s,p}^{1−t} + ‖T^D‖_{s,p}^{1−t}‖T‖_{s,p}ᵗ)"},
      {"sp.interp.le_dpow", "s3", K::Exact,
       "½(‖T^D‖_{s,p}ᵗ‖T‖_{s,p}^{1−t} + ‖T^D‖_{s,p}^{1−t}‖T‖_{s,p}ᵗ) ≤ ((d^{t/p} + d^{(1−t)/p})/2)‖T‖_{s,p}"},
      {"sp.coordinate.le_norm", "s3", K::Exact, "‖T_k‖_p ≤ ‖T‖_{s,p}"},
      {"sp.block.identity", "s3", K::Equality, "‖T‖_{s,p} = ‖𝕋‖_p = ‖P‖_p"},
      {"sp.direct_sum.identity", "s3", K::Equality, "‖T₁ ⊕ ⋯ ⊕ T_d‖_p = (Σ‖T_k‖_p^p)^{1/p}"},
      // Schatten numerical radius
      {"s4.nr.le_hypo", "s4", K::Optimized, "ω_{s,p}(T) ≤ ‖T‖_{s,h,p}"},
      {"s4.hypo.le_sp", "s4", K::Exact, "‖T‖_{s,h,p} ≤ ‖T‖_{s,p}"},
      {"s4.half_hypo.le_nr", "s4", K::Optimized, "½‖T‖_{s,h,p} ≤ ω_{s,p}(T)"},
      {"s4.hypo.lower_bound", "s4", K::Optimized, "c_{p,d}‖T‖_{s,p} ≤ ‖T‖_{s,h,p}, c = d^{−1/p} (p < 2), d^{−1/2} (p ≥ 2)"},
      {"s4.nr.lower_bound", "s4", K::Optimized, "(c_{p,d}/2)‖T‖_{s,p} ≤ ω_{s,p}(T)"},
      {"s4.p2.sp_le_hypo", "s4", K::Optimized, "(1/√(2d))‖T‖_{s,2} ≤ (1/√2)‖T‖_{s,h,2}"},
      {"s4.p2.hypo_le_nr", "s4", K::Optimized, "(1/√2)‖T‖_{s,h,2} ≤ ω_{s,2}(T)"},
      {"s4.p2.hypo_gram", "s4", K::Equality, "‖T‖_{s,h,2} = √λ_max(tr(T_kT_j*))"},
      {"s4.rmon.concave", "s4", K::Exact, "‖(ΣA_k)^r‖_p ≤ ‖ΣA_k^r‖_p, 0 < r < 1"},
      {"s4.rmon.convex", "s4", K::Exact, "‖(ΣA_k)^r‖_p ≤ d^{r−1}‖ΣA_k^r‖_p, r ≥ 1"},
      {"s4.rmon.concave.op", "s4", K::Exact, "‖(ΣA_k)^r‖ ≤ ‖ΣA_k^r‖, 0 < r < 1"},
      {"s4.rmon.convex.op", "s4", K::Exact, "‖(ΣA_k)^r‖ ≤ d^{r−1}‖ΣA_k^r‖, r ≥ 1"},
      {"s4.adjoint.s2", "s4", K::Equality, "‖T‖_{s,2} = ‖T*‖_{s,2}"},
      // equality conditions
      {"eq.normal.heinz_eq_mean", "equality", K::Equality, "T normal ⇒ ‖T̂(t)‖_{s,p} = ‖T̂‖_{s,p}"},
      {"eq.normal_invertible.aluthge_eq_heinz", "equality", K::Equality,
       "T normal, P invertible ⇒ ‖T̃‖_{s,p} = ‖T̂(t)‖_{s,p}"},
      {"eq.nonnormal.heinz_gap", "equality", K::Statistical,
       "T commuting, not normal ⇒ ‖T̂(t)‖_{s,p} < ‖T̂‖_{s,p} (gap > 1e-6)"},
      {"eq.nonnormal_invertible.aluthge_gap", "equality", K::Statistical,
       "T commuting, not normal, P invertible, t ≠ ½ ⇒ ‖T̃‖_{s,p} < ‖T̂(t)‖_{s,p} (gap > 1e-6)"},
      {"eq.heinz_sum.intertwining", "equality", K::Equality,
       "AX = XB ⇒ ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p = ‖AX + XB‖_p"},
      {"eq.heinz_sum.generic_gap", "equality", K::Statistical,
       "AX ≠ XB ⇒ ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p < ‖AX + XB‖_p (gap > 1e-6)"},
      {"eq.heinz_geo.intertwining", "equality", K::Equality,
       "AX = XB, A, B invertible ⇒ 2‖A^{½}XB^{½}‖_p = ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p"},
      {"eq.heinz_geo.generic_gap", "equality", K::Statistical,
       "AX ≠ XB, ν ≠ ½ ⇒ 2‖A^{½}XB^{½}‖_p < ‖A^νXB^{1−ν} + A^{1−ν}XB^ν‖_p (gap > 1e-6)"},
      // T∘T = 0
      {"zero.nilpotent.square", "zero", K::Exact, "nilpotent ensemble: max_k ‖(T∘T)_k‖ ≤ 1e-12"},
      {"zero.nilpotent.gen_aluthge", "zero", K::Exact, "T∘T = 0 ⇒ max_k ‖T̃(t)_k‖ ≤ 1e-10"},
      {"zero.nilpotent.heinz", "zero", K::Exact, "T∘T = 0 ⇒ max_k ‖T̂(t)_k‖ ≤ 1e-10"},
      {"zero.ginibre.square_nonzero", "zero", K::Exact, "ginibre: max_k ‖(T∘T)_k‖ > 1e-10"},
      {"zero.ginibre.gen_aluthge_nonzero", "zero", K::Exact, "T∘T ≠ 0 ⇒ max_k ‖T̃(t)_k‖ > 1e-10"},
      {"zero.ginibre.heinz_nonzero", "zero", K::Exact, "T∘T ≠ 0 ⇒ max_k ‖T̂(t)_k‖ > 1e-10"},
      {"zero.mean_nonzero", "zero", K::Exact, "T ≠ 0 ⇒ max_k ‖T̂_k‖ > 1e-10"},
      {"zero.zero_tuple.mean", "zero", K::Exact, "T = 0 ⇒ T̂ = 0"},
      // worked examples
      {"sharp.rank_one.sp_norm", "sharpness", K::Equality, "T = (E₁₁, E₂₁): ‖T‖_{s,p} = √2"},
      {"sharp.rank_one.hypo", "sharpness", K::Equality, "T = (E₁₁, E₂₁): ‖T‖_{s,h,p} = 1"},
      {"sharp.rank_one.scaled", "sharpness", K::Equality, "T = (E₁₁, E₂₁): (1/√2)‖T‖_{s,p} = ‖T‖_{s,h,p}"},
      {"sharp.diagonal.sp_scaled", "sharpness", K::Equality, "T = (E₁₁, E₂₂): 2^{−1/p}‖T‖_{s,p} = 1"},
      {"sharp.diagonal.hypo", "sharpness", K::Equality, "T = (E₁₁, E₂₂): ‖T‖_{s,h,p} = 1 (as stated)"},
      {"sharp.diagonal.hypo_closed_form", "sharpness", K::Equality,
       "T = (E₁₁, E₂₂): ‖T‖_{s,h,p} = max(1, 2^{1/p − 1/2})"},
  };
  return registry;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

long SuiteReport::violations() const {
  long v = 0;
  for (const auto& s : summary) {
    if (s.kind == ClaimKind::Statistical) {
      v += s.criterion_met ? 0 : 1;
    } else {
      v += s.fail;
    }
  }
  return v;
}

const InequalitySummary* SuiteReport::find(std::string_view id) const {
  for (const auto& s : summary) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

void summarize(SuiteReport& report) {
  std::vector<InequalitySummary> out;
  auto slot = [&](const std::string& id) -> InequalitySummary& {
    for (auto& s : out) {
      if (s.id == id) return s;
    }
    InequalitySummary s;
    s.id = id;
    if (const ClaimInfo* info = find_claim(id)) s.kind = info->kind;
    s.min_slack = std::numeric_limits<double>::infinity();
    out.push_back(std::move(s));
    return out.back();
  };
  for (const auto& r : report.records) {
    InequalitySummary& s = slot(r.id);
    ++s.count;
    if (r.status == Status::Fail) {
      ++s.fail;
    } else {
      ++s.pass;
      if (r.status == Status::RefinedPass) ++s.refined_pass;
    }
    if (r.slack < s.min_slack) {
      s.min_slack = r.slack;
      s.min_slack_at = r.fingerprint;
    }
  }
  for (auto& s : out) {
    s.pass_fraction = s.count > 0 ? static_cast<double>(s.pass) / static_cast<double>(s.count) : 1.0;
    s.criterion_met = s.kind == ClaimKind::Statistical ? s.pass_fraction >= kStatisticalFraction : s.fail == 0;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  report.summary = std::move(out);
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("SPHERTRANS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

double LazySup::value() {
  if (!value_) value_ = fn_(base_);
  return *value_;
}

double LazySup::escalated() {
  if (!escalated_) escalated_ = std::max(value(), fn_(base_.escalated()));
  return *escalated_;
}

TrialContext::TrialContext(const SuiteConfig& cfg, int trial, bool keep_subjects)
    : config(cfg), keep_subjects_(keep_subjects) {
  fingerprint.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  fingerprint.trial = trial;
  rng.seed(fingerprint.seed);
  optimizer = cfg.optimizer;
  optimizer.seed = mix_seed(fingerprint.seed, 0x5eedULL);
}

bool TrialContext::wants(std::string_view id) const { return config.only_id.empty() || config.only_id == id; }

void TrialContext::set_subject(const OperatorTuple& t) {
  if (keep_subjects_) subject_ = t;
}

void TrialContext::push(std::string_view id, double lhs, double rhs, double slack, Status status) {
  InequalityRecord r;
  r.id = std::string(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.status = status;
  r.fingerprint = fingerprint;
  records.push_back(std::move(r));
  if (keep_subjects_) subjects.push_back(subject_);
}

void TrialContext::exact(std::string_view id, double lhs, double rhs) {
  if (!wants(id)) return;
  const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
  const bool ok = lhs <= rhs + config.tol * scale;
  push(id, lhs, rhs, rhs - lhs, ok ? Status::Pass : Status::Fail);
}

void TrialContext::optimized(std::string_view id, double lhs, double rhs, const std::function<double()>& escalate) {
  if (!wants(id)) return;
  auto within = [&](double r) { return lhs <= r + config.optimized_slack * (1.0 + std::abs(r)); };
  if (within(rhs)) {
    push(id, lhs, rhs, rhs - lhs, Status::Pass);
    return;
  }
  const double refined = escalate();
  push(id, lhs, refined, refined - lhs, within(refined) ? Status::RefinedPass : Status::Fail);
}

void TrialContext::equality(std::string_view id, double lhs, double rhs, double tol,
                            const std::function<std::pair<double, double>()>& escalate) {
  if (!wants(id)) return;
  if (std::abs(lhs - rhs) <= tol) {
    push(id, lhs, rhs, -std::abs(lhs - rhs), Status::Pass);
    return;
  }
  if (!escalate) {
    push(id, lhs, rhs, -std::abs(lhs - rhs), Status::Fail);
    return;
  }
  const auto [l, r] = escalate();
  push(id, l, r, -std::abs(l - r), std::abs(l - r) <= tol ? Status::RefinedPass : Status::Fail);
}

void TrialContext::at_most(std::string_view id, double lhs, double rhs) {
  if (!wants(id)) return;
  push(id, lhs, rhs, rhs - lhs, lhs <= rhs ? Status::Pass : Status::Fail);
}

void TrialContext::strict_gap(std::string_view id, double lhs, double rhs, double gap) {
  if (!wants(id)) return;
  push(id, lhs, rhs, rhs - lhs, rhs - lhs > gap ? Status::Pass : Status::Fail);
}

TrialResults run_trials(const SuiteConfig& config, int count, const TrialFn& fn, bool keep_subjects) {
  std::vector<TrialResults> per_trial(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      TrialContext ctx(config, i, keep_subjects);
      fn(ctx);
      per_trial[static_cast<std::size_t>(i)] = {std::move(ctx.records), std::move(ctx.subjects)};
    }
  };
  const unsigned workers = std::min<unsigned>(config.workers > 0 ? config.workers : default_worker_count(),
                                              static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  TrialResults merged;
  for (auto& r : per_trial) {
    std::move(r.records.begin(), r.records.end(), std::back_inserter(merged.records));
    std::move(r.subjects.begin(), r.subjects.end(), std::back_inserter(merged.subjects));
  }
  return merged;
}

SuiteReport make_report(std::string_view suite, const SuiteConfig& config, TrialResults results,
                        double wall_seconds) {
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = config.seed;
  report.trials = config.trials;
  report.tol = config.tol;
  report.optimized_slack = config.optimized_slack;
  report.dmax = config.dmax;
  report.nmax = config.nmax;
  report.records = std::move(results.records);
  report.wall_seconds = wall_seconds;
  summarize(report);
  return report;
}

}  // namespace detail

namespace {

void validate(const SuiteConfig& c) {
  if (c.trials < 0) throw Error(ErrorCode::InvalidParameter, "trials must be nonnegative");
  if (c.dmax < 1) throw Error(ErrorCode::InvalidParameter, "dmax must be at least 1");
  if (c.nmax < 1) throw Error(ErrorCode::InvalidParameter, "nmax must be at least 1");
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw Error(ErrorCode::InvalidParameter, "tol must be positive");
  if (!(c.optimized_slack >= 0.0)) throw Error(ErrorCode::InvalidParameter, "optimized slack must be nonnegative");
}

SuiteReport run(std::string_view name, const SuiteConfig& config, const detail::TrialFn& fn, int count,
                bool keep_subjects, detail::TrialResults* raw = nullptr) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  detail::TrialResults results = detail::run_trials(config, count, fn, keep_subjects);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (raw) raw->subjects = results.subjects;
  return detail::make_report(name, config, std::move(results), wall);
}

}  // namespace

SuiteReport suite_section2(const SuiteConfig& c) { return run("s2", c, detail::section2_trial(), c.trials, false); }
SuiteReport suite_section3(const SuiteConfig& c) { return run("s3", c, detail::section3_trial(), c.trials, false); }
SuiteReport suite_section4(const SuiteConfig& c) { return run("s4", c, detail::section4_trial(), c.trials, false); }
SuiteReport equality_case_check(const SuiteConfig& c) {
  return run("equality", c, detail::equality_trial(), c.trials, false);
}
SuiteReport zero_equivalence_check(const SuiteConfig& c) {
  return run("zero", c, detail::zero_trial(), c.trials, false);
}

SuiteReport sharpness_examples(const SuiteConfig& c) {
  SuiteReport r = run("sharpness", c, detail::sharpness_trial(), detail::sharpness_trial_count(), false);
  r.trials = detail::sharpness_trial_count();
  return r;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  if (name == "s2") return suite_section2(config);
  if (name == "s3") return suite_section3(config);
  if (name == "s4") return suite_section4(config);
  if (name == "equality") return equality_case_check(config);
  if (name == "sharpness") return sharpness_examples(config);
  if (name == "zero") return zero_equivalence_check(config);
  throw Error(ErrorCode::InvalidParameter, "unknown suite '" + std::string(name) + "'");
}

SlackHistogram tightness_stats(const SuiteReport& report) {
  SlackHistogram h;
  // Relative slack bins: (−∞,0), [0,1e-12), [1e-12,1e-9), …, [1e-1,1), [1,∞).
  h.edges = {0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1e-2, 1e-1, 1.0};
  for (const auto& r : report.records) {
    auto& bins = h.counts[r.id];
    if (bins.empty()) bins.assign(h.edges.size() + 1, 0);
    const double rel = r.slack / (1.0 + std::abs(r.rhs));
    const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), rel);
    ++bins[static_cast<std::size_t>(it - h.edges.begin())];
  }
  return h;
}

FuzzResult fuzz(std::string_view id, const SuiteConfig& config) {
  const ClaimInfo* info = find_claim(id);
  if (!info) throw Error(ErrorCode::InvalidParameter, "unknown inequality id '" + std::string(id) + "'");
  SuiteConfig cfg = config;
  cfg.only_id = std::string(id);

  detail::TrialFn fn;
  int count = cfg.trials;
  if (info->suite == "s2") fn = detail::section2_trial();
  else if (info->suite == "s3") fn = detail::section3_trial();
  else if (info->suite == "s4") fn = detail::section4_trial();
  else if (info->suite == "equality") fn = detail::equality_trial();
  else if (info->suite == "zero") fn = detail::zero_trial();
  else {
    fn = detail::sharpness_trial();
    count = detail::sharpness_trial_count();
  }

  detail::TrialResults raw;
  FuzzResult out;
  out.report = run(std::string("fuzz:") + std::string(id), cfg, fn, count, true, &raw);
  const auto& recs = out.report.records;
  std::size_t best = recs.size();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (best == recs.size() || recs[i].slack < recs[best].slack) best = i;
  }
  if (best < recs.size()) {
    out.witness_record = recs[best];
    if (best < raw.subjects.size()) out.witness = raw.subjects[best];
  }
  out.histogram = tightness_stats(out.report);
  return out;
}

}  // namespace sphertrans
