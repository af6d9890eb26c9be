#include <doctest.h>

#include <set>

#include "sphertrans/error.hpp"
#include "sphertrans/harness.hpp"
#include "sphertrans/norms.hpp"

using namespace sphertrans;

namespace {

SuiteConfig small(int trials, unsigned workers = 1) {
  SuiteConfig c;
  c.trials = trials;
  c.dmax = 3;
  c.nmax = 4;
  c.workers = workers;
  return c;
}

}  // namespace

TEST_CASE("claim registry") {
  std::set<std::string_view> ids;
  for (const auto& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(std::find(std::begin(kSuiteNames), std::end(kSuiteNames), c.suite) != std::end(kSuiteNames));
    CHECK(!c.statement.empty());
  }
  REQUIRE(find_claim("hypo.heinz.le_r0_mix") != nullptr);
  CHECK(find_claim("hypo.heinz.le_r0_mix")->kind == ClaimKind::Optimized);
  CHECK(find_claim("no.such.claim") == nullptr);
  CHECK(find_claim("eq.nonnormal.heinz_gap")->kind == ClaimKind::Statistical);
}

TEST_CASE("small suite runs pass and account for every record") {
  for (std::string_view name : kSuiteNames) {
    const SuiteReport r = run_suite(name, small(6));
    CAPTURE(name);
    CHECK(r.suite == name);
    CHECK(r.passed() == (name != "sharpness"));
    long total = 0;
    for (const auto& s : r.summary) {
      CHECK(s.count == s.pass + s.fail);
      CHECK(s.refined_pass <= s.pass);
      REQUIRE(find_claim(s.id) != nullptr);
      CHECK(find_claim(s.id)->suite == name);
      total += s.count;
    }
    CHECK(total == static_cast<long>(r.records.size()));
    for (const auto& rec : r.records) {
      CHECK(rec.fingerprint.trial >= 0);
      CHECK(std::isfinite(rec.slack));
    }
  }
  CHECK_THROWS_AS(run_suite("s5", small(1)), Error);
}

TEST_CASE("sharpness suite isolates the diagonal hypo-norm claim") {
  const SuiteReport r = sharpness_examples();
  CHECK(r.violations() == 2);
  for (const auto& s : r.summary) {
    CAPTURE(s.id);
    CHECK(s.criterion_met == (s.id != "sharp.diagonal.hypo"));
  }
  for (const auto& rec : r.records) {
    if (rec.id == "sharp.diagonal.hypo" && rec.status == Status::Fail) {
      REQUIRE(rec.fingerprint.p.has_value());
      CHECK(*rec.fingerprint.p < 2.0);
    }
  }
}

TEST_CASE("reports are reproducible and independent of the worker count") {
  for (std::string_view name : {"s2", "s3", "s4", "equality", "zero"}) {
    CAPTURE(name);
    const std::string a = report_to_json(run_suite(name, small(4, 1)), false);
    const std::string b = report_to_json(run_suite(name, small(4, 1)), false);
    const std::string c = report_to_json(run_suite(name, small(4, 3)), false);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("report JSON layout") {
  const SuiteReport r = zero_equivalence_check(small(3));
  const std::string j = report_to_json(r, false);
  CHECK(j.find("\"wall_seconds\"") == std::string::npos);
  CHECK(report_to_json(r).find("\"wall_seconds\"") != std::string::npos);
  for (const char* key : {"\"suite\"", "\"seed\"", "\"records\"", "\"summary\"", "\"fingerprint\"", "\"min_slack\""})
    CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("configuration validation") {
  SuiteConfig c = small(1);
  c.tol = 0.0;
  CHECK_THROWS_AS(suite_section3(c), Error);
  c = small(-1);
  CHECK_THROWS_AS(suite_section3(c), Error);
  c = small(1);
  c.nmax = 0;
  CHECK_THROWS_AS(suite_section3(c), Error);
  CHECK(suite_section3(small(0)).records.empty());
}

TEST_CASE("fuzz keeps the tightest instance as witness") {
  const FuzzResult f = fuzz("s4.hypo.le_sp", small(8));
  REQUIRE(f.witness_record.has_value());
  REQUIRE(f.witness.has_value());
  for (const auto& rec : f.report.records) {
    CHECK(rec.id == "s4.hypo.le_sp");
    CHECK(rec.slack >= f.witness_record->slack);
  }
  const double p = f.witness_record->fingerprint.p.value();
  CHECK(f.witness->size() == static_cast<std::size_t>(f.witness_record->fingerprint.d));
  CHECK(std::abs(schatten_spherical_norm(*f.witness, p) - f.witness_record->rhs) <= 1e-12 * (1 + f.witness_record->rhs));
  const auto& bins = f.histogram.counts.at("s4.hypo.le_sp");
  CHECK(bins.size() == f.histogram.edges.size() + 1);
  long total = 0;
  for (long b : bins) total += b;
  CHECK(total == static_cast<long>(f.report.records.size()));
  CHECK(bins[0] == 0);
  CHECK_THROWS_AS(fuzz("no.such.claim", small(1)), Error);
}

TEST_CASE("restricting to one claim") {
  SuiteConfig c = small(5);
  c.only_id = "sp.direct_sum.identity";
  const SuiteReport r = suite_section3(c);
  REQUIRE(r.summary.size() == 1);
  CHECK(r.summary[0].id == "sp.direct_sum.identity");
  CHECK(r.summary[0].count == 5);
}

TEST_CASE("ensemble override") {
  SuiteConfig c = small(6);
  c.ensemble = Ensemble::Contraction;
  for (const auto& rec : suite_section3(c).records) CHECK(rec.fingerprint.ensemble == "contraction");
}
