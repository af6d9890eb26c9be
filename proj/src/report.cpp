#include <json.hpp>

#include "sphertrans/harness.hpp"

namespace sphertrans {

namespace {

using nlohmann::ordered_json;

ordered_json fingerprint_json(const Fingerprint& f) {
  ordered_json j;
  j["seed"] = f.seed;
  j["trial"] = f.trial;
  j["ensemble"] = f.ensemble;
  j["d"] = f.d;
  j["n"] = f.n;
  if (f.t) j["t"] = *f.t;
  if (f.lambda) j["lambda"] = *f.lambda;
  if (f.p) j["p"] = *f.p;
  if (f.r) j["r"] = *f.r;
  return j;
}

}  // namespace

std::string report_to_json(const SuiteReport& report, bool include_wall_time) {
  ordered_json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  out["config"] = {{"tol", report.tol},
                   {"optimized_slack", report.optimized_slack},
                   {"dmax", report.dmax},
                   {"nmax", report.nmax}};

  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json j;
    j["id"] = r.id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["status"] = std::string(to_string(r.status));
    j["fingerprint"] = fingerprint_json(r.fingerprint);
    records.push_back(std::move(j));
  }
  out["records"] = std::move(records);

  ordered_json per_claim = ordered_json::array();
  for (const auto& s : report.summary) {
    ordered_json j;
    j["id"] = s.id;
    const ClaimInfo* info = find_claim(s.id);
    j["statement"] = info ? std::string(info->statement) : std::string();
    j["kind"] = std::string(to_string(s.kind));
    j["count"] = s.count;
    j["pass"] = s.pass;
    j["refined_pass"] = s.refined_pass;
    j["fail"] = s.fail;
    j["min_slack"] = s.min_slack;
    j["min_slack_fingerprint"] = fingerprint_json(s.min_slack_at);
    if (s.kind == ClaimKind::Statistical) {
      j["statistical"] = true;
      j["required_fraction"] = kStatisticalFraction;
      j["pass_fraction"] = s.pass_fraction;
    }
    j["criterion_met"] = s.criterion_met;
    per_claim.push_back(std::move(j));
  }
  ordered_json summary;
  summary["passed"] = report.passed();
  summary["violations"] = report.violations();
  summary["records"] = report.records.size();
  if (include_wall_time) summary["wall_seconds"] = report.wall_seconds;
  summary["inequalities"] = std::move(per_claim);
  out["summary"] = std::move(summary);
  return out.dump(2) + "\n";
}

std::string histogram_to_json(const SlackHistogram& histogram) {
  ordered_json out;
  out["relative_slack_edges"] = histogram.edges;
  ordered_json counts = ordered_json::object();
  for (const auto& [id, bins] : histogram.counts) counts[id] = bins;
  out["counts"] = std::move(counts);
  return out.dump(2) + "\n";
}

}  // namespace sphertrans
