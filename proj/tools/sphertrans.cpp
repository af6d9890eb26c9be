// sphertrans: transforms, norms, classification and randomized verification
// of operator tuples from the command line.
//
// Exit codes: 0 success, 1 verification failures, 2 I/O or parse error,
// 3 invalid parameters.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphertrans/harness.hpp"
#include "sphertrans/io.hpp"
#include "sphertrans/norms.hpp"
#include "sphertrans/predicates.hpp"
#include "sphertrans/transforms.hpp"

namespace st = sphertrans;
using nlohmann::ordered_json;

namespace {

// Pads by code points so labels with ‖, ω and subscripts line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cols = 0;
  for (unsigned char ch : s) cols += (ch & 0xC0) != 0x80;
  return s + std::string(width > cols ? width - cols : 1, ' ');
}

enum Exit { kOk = 0, kVerifyFailed = 1, kIoError = 2, kBadParameter = 3 };

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string transform;
  std::optional<double> t;
  std::optional<double> lambda;
  std::vector<double> p;
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 42;
  int dmax = 4;
  int nmax = 6;
  double tol = 1e-8;
  std::string report;
  std::string format;
  std::string ensemble;
  std::string id;
};

st::TupleDocument load(const Options& o) { return st::read_tuple_document(o.input); }

int cmd_compute(const Options& o) {
  const st::TupleDocument doc = load(o);
  const st::OperatorTuple& t = doc.tuple;
  auto need = [&](const std::optional<double>& v, const char* flag) {
    if (!v) throw ParameterError(std::string("--") + flag + " is required for transform '" + o.transform + "'");
    return *v;
  };

  std::optional<st::OperatorTuple> out;
  if (o.transform == "duggal") out = st::duggal(t);
  else if (o.transform == "aluthge") out = st::aluthge(t);
  else if (o.transform == "gen-aluthge") out = st::generalized_aluthge(t, need(o.t, "t"));
  else if (o.transform == "heinz") out = st::heinz(t, need(o.t, "t"));
  else if (o.transform == "mean") out = st::mean(t);
  else if (o.transform == "lambda-mean") out = st::lambda_mean(t, need(o.lambda, "lambda"));
  else throw ParameterError("--transform: unknown transform '" + o.transform + "'");

  const std::string name = doc.name.empty() ? o.transform : doc.name + "." + o.transform;
  st::write_tuple_document(o.output, {name, *out});
  return kOk;
}

struct SchattenRow {
  double p, norm, hypo, radius;
  std::optional<double> gram;
};

int cmd_norms(const Options& o) {
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv" && format != "table") {
    throw ParameterError("--format: expected json, csv or table");
  }
  std::vector<double> ps = o.p.empty() ? std::vector<double>{2.0} : o.p;
  for (double p : ps) st::require_schatten_p(p);

  const st::TupleDocument doc = load(o);
  const st::OperatorTuple& t = doc.tuple;
  st::OptimizerConfig cfg;
  cfg.seed = o.seed;

  const double sph = st::spherical_norm(t);
  const double euc = st::euclidean_norm(t);
  const st::SupremumEstimate hyp = st::hypo_norm(t, cfg);
  const st::JointNumericalRadius nr = st::joint_numerical_radius(t, cfg);
  std::vector<SchattenRow> rows;
  for (double p : ps) {
    SchattenRow r{p, st::schatten_spherical_norm(t, p), st::schatten_hypo_norm(t, p, cfg).value,
                  st::schatten_p_numerical_radius(t, p, cfg).value, std::nullopt};
    if (p == 2.0) r.gram = st::schatten_hypo_norm_gram(t);
    rows.push_back(r);
  }

  std::ostringstream s;
  if (format == "json") {
    ordered_json j;
    j["name"] = doc.name;
    j["d"] = t.size();
    j["n"] = t.dim();
    j["seed"] = o.seed;
    j["spherical_norm"] = sph;
    j["euclidean_norm"] = euc;
    j["hypo_norm"] = hyp.value;
    j["hypo_norm_spread"] = hyp.spread;
    j["joint_numerical_radius"] = {{"value", nr.value},
                                   {"vector_route", nr.vector_route.value},
                                   {"combination_route", nr.combination_route.value},
                                   {"discrepancy", nr.discrepancy}};
    ordered_json sch = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json e;
      e["p"] = r.p;
      e["schatten_spherical_norm"] = r.norm;
      e["schatten_hypo_norm"] = r.hypo;
      if (r.gram) e["schatten_hypo_norm_closed_form"] = *r.gram;
      e["schatten_numerical_radius"] = r.radius;
      sch.push_back(std::move(e));
    }
    j["schatten"] = std::move(sch);
    s << j.dump(2) << "\n";
  } else if (format == "csv") {
    s << std::setprecision(17) << "quantity,p,value\n";
    s << "spherical_norm,," << sph << "\n";
    s << "euclidean_norm,," << euc << "\n";
    s << "hypo_norm,," << hyp.value << "\n";
    s << "joint_numerical_radius,," << nr.value << "\n";
    for (const auto& r : rows) {
      s << "schatten_spherical_norm," << r.p << "," << r.norm << "\n";
      s << "schatten_hypo_norm," << r.p << "," << r.hypo << "\n";
      s << "schatten_numerical_radius," << r.p << "," << r.radius << "\n";
    }
  } else {
    s << std::setprecision(12);
    auto line = [&](const std::string& label, double v) { s << pad(label, 18) << v << "\n"; };
    s << doc.name << " (d = " << t.size() << ", n = " << t.dim() << ")\n";
    line("‖T‖", sph);
    line("‖T‖_e", euc);
    line("‖T‖_h", hyp.value);
    line("ω(T)", nr.value);
    for (const auto& r : rows) {
      std::ostringstream p;
      p << r.p;
      line("‖T‖_{s," + p.str() + "}", r.norm);
      line("‖T‖_{s,h," + p.str() + "}", r.hypo);
      line("ω_{s," + p.str() + "}(T)", r.radius);
    }
  }
  st::write_text(o.output, s.str());
  return kOk;
}

ordered_json predicate_json(const st::PredicateResult& r) {
  return {{"holds", r.holds}, {"residual", r.residual}, {"tolerance", r.tolerance}};
}

int cmd_classify(const Options& o) {
  const std::string format = o.format.empty() ? "table" : o.format;
  if (format != "json" && format != "table") throw ParameterError("--format: expected json or table");
  const st::TupleDocument doc = load(o);
  const st::Classification c = st::classify(doc.tuple);

  std::ostringstream s;
  if (format == "json") {
    ordered_json j;
    j["name"] = doc.name;
    j["tolerance"] = c.tolerance;
    j["commuting"] = predicate_json(c.commuting);
    j["normal"] = predicate_json(c.normal);
    j["jointly_hyponormal"] = predicate_json(c.jointly_hyponormal);
    j["spherically_quasinormal"] = predicate_json(c.spherically_quasinormal.commutant);
    if (c.spherically_quasinormal.block) {
      j["spherically_quasinormal_block"] = predicate_json(*c.spherically_quasinormal.block);
    }
    j["square_zero"] = predicate_json(c.square_zero);
    j["taylor_invertibility_necessary_condition"] = predicate_json(c.taylor_proxy);
    ordered_json coords = ordered_json::array();
    for (std::size_t k = 0; k < c.coordinate_normal.size(); ++k) {
      coords.push_back({{"normal", predicate_json(c.coordinate_normal[k])},
                        {"quasinormal", predicate_json(c.coordinate_quasinormal[k])},
                        {"hyponormal", predicate_json(c.coordinate_hyponormal[k])}});
    }
    j["coordinates"] = std::move(coords);
    s << j.dump(2) << "\n";
  } else {
    auto row = [&](const std::string& label, const st::PredicateResult& r) {
      s << pad(label, 34) << pad(r.holds ? "yes" : "no", 6) << "residual "
        << std::setprecision(3) << std::scientific << r.residual << std::defaultfloat << "\n";
    };
    s << doc.name << " (tolerance " << std::setprecision(3) << std::scientific << c.tolerance << std::defaultfloat
      << ")\n";
    row("commuting", c.commuting);
    row("normal", c.normal);
    row("jointly hyponormal", c.jointly_hyponormal);
    row("spherically quasinormal", c.spherically_quasinormal.commutant);
    if (c.spherically_quasinormal.block) row("  block form", *c.spherically_quasinormal.block);
    row("T∘T = 0", c.square_zero);
    s << pad("P invertible (Taylor, necessary)", 34) << pad(c.taylor_proxy.holds ? "yes" : "no", 6) << "λ_min(P) " << std::setprecision(3) << std::scientific
      << c.taylor_proxy.residual << std::defaultfloat << "\n";
    for (std::size_t k = 0; k < c.coordinate_normal.size(); ++k) {
      const std::string tag = "T" + std::to_string(k + 1) + " ";
      row(tag + "normal", c.coordinate_normal[k]);
      row(tag + "quasinormal", c.coordinate_quasinormal[k]);
      row(tag + "hyponormal", c.coordinate_hyponormal[k]);
    }
  }
  st::write_text(o.output, s.str());
  return kOk;
}

st::SuiteConfig suite_config(const Options& o) {
  st::SuiteConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.dmax = o.dmax;
  cfg.nmax = o.nmax;
  cfg.tol = o.tol;
  if (!o.ensemble.empty()) cfg.ensemble = st::parse_ensemble(o.ensemble);
  return cfg;
}

void print_summary(const st::SuiteReport& r) {
  std::cout << r.suite << ": " << r.records.size() << " checks, " << r.violations() << " violation(s), "
            << std::fixed << std::setprecision(2) << r.wall_seconds << " s" << std::defaultfloat << "\n";
  for (const auto& s : r.summary) {
    if (s.criterion_met && s.refined_pass == 0) continue;
    std::cout << "  " << (s.criterion_met ? "ok  " : "FAIL") << " " << s.id << "  pass " << s.pass << "/" << s.count;
    if (s.refined_pass) std::cout << " (" << s.refined_pass << " after escalation)";
    std::cout << "  min slack " << std::setprecision(3) << std::scientific << s.min_slack << std::defaultfloat
              << "  seed " << s.min_slack_at.seed << " trial " << s.min_slack_at.trial << "\n";
  }
}

int cmd_verify(const Options& o) {
  const st::SuiteConfig cfg = suite_config(o);
  std::vector<std::string> suites;
  if (o.suite == "all") {
    for (auto s : st::kSuiteNames) suites.emplace_back(s);
  } else {
    suites.push_back(o.suite);
  }
  std::vector<st::SuiteReport> reports;
  for (const auto& s : suites) {
    reports.push_back(st::run_suite(s, cfg));
    print_summary(reports.back());
  }
  if (!o.report.empty()) {
    std::string text;
    if (reports.size() == 1) {
      text = st::report_to_json(reports.front());
    } else {
      text = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        text += st::report_to_json(reports[i]);
        if (i + 1 < reports.size()) text.insert(text.size() - 1, ",");
      }
      text += "]\n";
    }
    st::write_text(o.report, text);
  }
  long violations = 0;
  for (const auto& r : reports) violations += r.violations();
  return violations == 0 ? kOk : kVerifyFailed;
}

int cmd_fuzz(const Options& o) {
  const st::FuzzResult res = st::fuzz(o.id, suite_config(o));
  const auto& rec = res.witness_record;
  ordered_json j;
  j["id"] = o.id;
  j["trials"] = res.report.trials;
  j["seed"] = o.seed;
  j["violations"] = res.report.violations();
  if (rec) {
    j["witness"] = {{"lhs", rec->lhs},
                    {"rhs", rec->rhs},
                    {"slack", rec->slack},
                    {"status", std::string(st::to_string(rec->status))},
                    {"trial", rec->fingerprint.trial},
                    {"trial_seed", rec->fingerprint.seed},
                    {"ensemble", rec->fingerprint.ensemble}};
  }
  j["histogram"] = ordered_json::parse(st::histogram_to_json(res.histogram));
  std::cout << j.dump(2) << "\n";
  if (!o.output.empty() && res.witness) {
    st::write_tuple_document(o.output, {"witness." + o.id, *res.witness});
  }
  if (!o.report.empty()) st::write_text(o.report, st::report_to_json(res.report));
  return res.report.violations() == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical transforms, joint norms and numerical radii of operator tuples"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Apply a transform and write the resulting tuple");
  compute->add_option("--input", o.input, "Tuple document")->required();
  compute->add_option("--transform", o.transform, "duggal | aluthge | gen-aluthge | heinz | mean | lambda-mean")
      ->required();
  compute->add_option("--t", o.t, "Transform parameter in [0, 1]");
  compute->add_option("--lambda", o.lambda, "λ-mean weight in [0, 1]");
  compute->add_option("--output", o.output, "Output document (default stdout)");

  auto* norms = app.add_subcommand("norms", "Report norms and numerical radii");
  norms->add_option("--input", o.input, "Tuple document")->required();
  norms->add_option("--p", o.p, "Schatten exponent (repeatable, default 2)")->take_all();
  norms->add_option("--format", o.format, "json | csv | table");
  norms->add_option("--seed", o.seed, "Optimizer seed");
  norms->add_option("--output", o.output, "Output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "Structural predicates with residuals");
  classify->add_option("--input", o.input, "Tuple document")->required();
  classify->add_option("--format", o.format, "table | json");
  classify->add_option("--output", o.output, "Output file (default stdout)");

  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "Trials per suite");
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--dmax", o.dmax, "Largest tuple length");
    sub->add_option("--nmax", o.nmax, "Largest matrix dimension");
    sub->add_option("--tol", o.tol, "Tolerance of exact checks");
    sub->add_option("--ensemble", o.ensemble, "ginibre | nilpotent | contraction");
    sub->add_option("--report", o.report, "JSON report path");
  };
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "s2 | s3 | s4 | equality | sharpness | zero | all");
  add_run_options(verify);

  auto* fuzz = app.add_subcommand("fuzz", "Search for the minimal-slack instance of one inequality");
  fuzz->add_option("id", o.id, "Inequality id")->required();
  fuzz->add_option("--output", o.output, "Write the witness tuple here");
  add_run_options(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParameter;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*norms) return cmd_norms(o);
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*fuzz) return cmd_fuzz(o);
  } catch (const st::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const st::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameter;
  } catch (const st::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case st::ErrorCode::InvalidParameter:
      case st::ErrorCode::InvalidP: return kBadParameter;
      case st::ErrorCode::NonSquare:
      case st::ErrorCode::NonFinite:
      case st::ErrorCode::DimensionMismatch: return kIoError;
      default: return kVerifyFailed;
    }
  }
  return kOk;
}
