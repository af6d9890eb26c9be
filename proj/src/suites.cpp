#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "sphertrans/norms.hpp"
#include "sphertrans/predicates.hpp"
#include "sphertrans/transforms.hpp"
#include "trial.hpp"

namespace sphertrans::detail {

namespace {

constexpr std::array<double, 5> kSuiteP = {1.0, 1.5, 2.0, 3.0, 5.0};
constexpr std::array<double, 4> kStrictP = {1.5, 2.0, 3.0, 5.0};
constexpr std::array<double, 6> kExampleP = {1.0, 1.5, 2.0, 3.0, 5.0, 10.0};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <std::size_t N>
double pick(Rng& rng, const std::array<double, N>& values) {
  return values[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(N) - 1))];
}

double lambda_grid(Rng& rng) { return uniform_int(rng, 0, 10) / 10.0; }

// t ∈ [0.1, 0.4] ∪ [0.6, 0.9]
double off_center_t(Rng& rng) {
  const double t = uniform(rng, 0.1, 0.4);
  return uniform_int(rng, 0, 1) == 0 ? t : 1.0 - t;
}

// Open interval (0, 1).
double open_unit(Rng& rng) {
  double t = 0.0;
  while (t == 0.0) t = uniform(rng, 0.0, 1.0);
  return t;
}

struct Shape {
  std::size_t d;
  Index n;
  Ensemble ensemble;
};

Shape sample_shape(TrialContext& c) {
  constexpr std::array<Ensemble, 3> cycle = {Ensemble::Ginibre, Ensemble::Contraction, Ensemble::Nilpotent};
  Shape s;
  s.d = static_cast<std::size_t>(uniform_int(c.rng, 1, c.config.dmax));
  s.n = uniform_int(c.rng, std::min(2, c.config.nmax), c.config.nmax);
  s.ensemble = c.config.ensemble.value_or(cycle[static_cast<std::size_t>(c.fingerprint.trial) % cycle.size()]);
  c.fingerprint.d = static_cast<int>(s.d);
  c.fingerprint.n = static_cast<int>(s.n);
  c.fingerprint.ensemble = std::string(to_string(s.ensemble));
  return s;
}

bool any_wanted(const TrialContext& c, std::initializer_list<std::string_view> ids) {
  return std::any_of(ids.begin(), ids.end(), [&](auto id) { return c.wants(id); });
}

template <class Lhs, class Rhs, class Esc>
void optimized(TrialContext& c, std::string_view id, Lhs lhs, Rhs rhs, Esc escalate) {
  if (!c.wants(id)) return;
  c.optimized(id, lhs(), rhs(), escalate);
}

OperatorTuple as_tuple(std::initializer_list<ComplexMatrix> ms) { return OperatorTuple(std::vector<ComplexMatrix>(ms)); }

double max_norm(const OperatorTuple& t) { return max_coordinate_norm(t); }

// Raw Heinz-type inequalities for positive A, B and arbitrary X.
void heinz_matrix_checks(TrialContext& c, Index n) {
  const ComplexMatrix a = random_psd(n, c.rng);
  const ComplexMatrix b = random_psd(n, c.rng);
  const ComplexMatrix x = ginibre_matrix(n, n, c.rng) / std::sqrt(static_cast<double>(n));
  const double nu = uniform(c.rng, 0.0, 1.0);
  const double p = pick(c.rng, kSuiteP);
  const double r0 = std::min(nu, 1.0 - nu);
  c.set_subject(as_tuple({a, b, x}));

  const ComplexMatrix a_half = psd_power(a, 0.5), b_half = psd_power(b, 0.5);
  const ComplexMatrix a_nu = psd_power(a, nu), a_co = psd_power(a, 1.0 - nu);
  const ComplexMatrix b_nu = psd_power(b, nu), b_co = psd_power(b, 1.0 - nu);
  const ComplexMatrix geo = a_half * x * b_half;
  const ComplexMatrix mix = a_nu * x * b_co + a_co * x * b_nu;
  const ComplexMatrix sum = a * x + x * b;
  const ComplexMatrix single = a_nu * x * b_co;

  const Fingerprint saved = c.fingerprint;
  c.fingerprint.ensemble = "psd";
  c.fingerprint.t = nu;
  c.fingerprint.lambda.reset();

  auto run = [&](auto norm, const char* suffix) {
    const std::string sfx = suffix;
    const double g = norm(geo), m = norm(mix), s = norm(sum);
    const double refined = 4.0 * r0 * g + (1.0 - 2.0 * r0) * s;
    c.exact("heinz.geo_le_heinz" + sfx, 2.0 * g, m);
    c.exact("heinz.heinz_le_sum" + sfx, m, s);
    c.exact("heinz.refined" + sfx, m, refined);
    c.exact("heinz.refined_le_sum" + sfx, refined, s);
    c.exact("heinz.interp" + sfx, norm(single), std::pow(norm(a * x), nu) * std::pow(norm(x * b), 1.0 - nu));
  };
  c.fingerprint.p.reset();
  run([](const ComplexMatrix& m) { return operator_norm(m); }, ".op");
  c.fingerprint.p = p;
  run([p](const ComplexMatrix& m) { return schatten_norm(m, p); }, ".p");
  c.fingerprint = saved;
}

void section2(TrialContext& c) {
  const Shape shape = sample_shape(c);
  const OperatorTuple t = random_tuple(shape.d, shape.n, c.rng, shape.ensemble);
  const double param = uniform(c.rng, 0.0, 1.0);
  const double lam = lambda_grid(c.rng);
  const double r0 = std::min(param, 1.0 - param);
  c.fingerprint.t = param;
  c.set_subject(t);

  const SphericalPolar polar = spherical_polar(t);
  const OperatorTuple tilde = aluthge(polar);
  const OperatorTuple hat_t = heinz(polar, param);
  const OperatorTuple hat = mean(t, polar);
  const OperatorTuple dug = duggal(polar);

  const double n_t = spherical_norm(t), n_til = spherical_norm(tilde), n_ht = spherical_norm(hat_t);
  const double n_hat = spherical_norm(hat), n_d = spherical_norm(dug);
  const double mix = 2.0 * r0 * n_til + (1.0 - 2.0 * r0) * n_hat;
  const double interp = 0.5 * (std::pow(n_d, param) * std::pow(n_t, 1.0 - param) +
                               std::pow(n_d, 1.0 - param) * std::pow(n_t, param));
  c.exact("op.heinz.le_r0_mix", n_ht, mix);
  c.exact("op.r0_mix.le_mean", mix, n_hat);
  c.exact("op.mean.le_norm", n_hat, n_t);
  c.exact("op.aluthge.le_heinz", n_til, n_ht);
  c.exact("op.heinz.le_interp", n_ht, interp);
  c.exact("op.interp.le_norm", interp, n_t);
  c.exact("op.duggal.le_norm", n_d, n_t);

  for (int k = 0; k <= 10; ++k) {
    const double l = k / 10.0;
    c.fingerprint.lambda = l;
    const double n_m = spherical_norm(lambda_mean(t, polar, l));
    c.exact("op.lmean.lower", 2.0 * std::sqrt(l - l * l) * n_til, n_m);
    c.exact("op.lmean.upper", n_m, l * n_t + (1.0 - l) * n_d);
    c.exact("op.lmean.convex_le_norm", l * n_t + (1.0 - l) * n_d, n_t);
  }
  c.fingerprint.lambda.reset();

  const double n_e = euclidean_norm(t);
  c.exact("norm.le_euclidean", n_t, n_e);

  // hypo-norms
  auto hypo = [&c](const OperatorTuple& x) {
    return c.sup([x](const OptimizerConfig& oc) { return hypo_norm(x, oc).value; });
  };
  const OperatorTuple m_lam = lambda_mean(t, polar, lam);
  LazySup h_t = hypo(t), h_til = hypo(tilde), h_ht = hypo(hat_t), h_hat = hypo(hat), h_d = hypo(dug),
          h_m = hypo(m_lam);

  optimized(
      c, "hypo.heinz.le_r0_mix", [&] { return h_ht.value(); },
      [&] { return 2.0 * r0 * h_til.value() + (1.0 - 2.0 * r0) * h_hat.value(); },
      [&] { return 2.0 * r0 * h_til.escalated() + (1.0 - 2.0 * r0) * h_hat.escalated(); });
  optimized(
      c, "hypo.r0_mix.le_mean", [&] { return 2.0 * r0 * h_til.value() + (1.0 - 2.0 * r0) * h_hat.value(); },
      [&] { return h_hat.value(); }, [&] { return h_hat.escalated(); });
  if (c.wants("hypo.mean.le_norm")) c.exact("hypo.mean.le_norm", h_hat.value(), n_t);

  c.fingerprint.lambda = lam;
  const double root = 2.0 * std::sqrt(lam - lam * lam);
  optimized(
      c, "hypo.lmean.lower", [&] { return root * h_til.value(); }, [&] { return h_m.value(); },
      [&] { return h_m.escalated(); });
  optimized(
      c, "hypo.lmean.upper", [&] { return h_m.value(); },
      [&] { return lam * h_t.value() + (1.0 - lam) * h_d.value(); },
      [&] { return lam * h_t.escalated() + (1.0 - lam) * h_d.escalated(); });
  if (c.wants("hypo.lmean.convex_le_norm")) {
    c.exact("hypo.lmean.convex_le_norm", lam * h_t.value() + (1.0 - lam) * h_d.value(), n_t);
  }
  c.fingerprint.lambda.reset();

  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(shape.d));
  optimized(
      c, "hypo.lower_bound", [&] { return inv_sqrt_d * n_t; }, [&] { return h_t.value(); },
      [&] { return h_t.escalated(); });
  if (c.wants("hypo.le_norm")) c.exact("hypo.le_norm", h_t.value(), n_t);

  // joint numerical radius
  auto radius = [&c](const OperatorTuple& x) {
    return c.sup([x](const OptimizerConfig& oc) { return joint_numerical_radius(x, oc).value; });
  };
  LazySup w_til = radius(tilde), w_ht = radius(hat_t), w_hat = radius(hat);
  optimized(
      c, "nr.aluthge.le_heinz", [&] { return w_til.value(); }, [&] { return w_ht.value(); },
      [&] { return w_ht.escalated(); });
  optimized(
      c, "nr.heinz.le_mean", [&] { return w_ht.value(); }, [&] { return w_hat.value(); },
      [&] { return w_hat.escalated(); });

  if (any_wanted(c, {"nr.lower_bound", "nr.le_hypo", "nr.le_norm", "nr.le_euclidean", "nr.routes_agree"})) {
    const JointNumericalRadius w_t = joint_numerical_radius(t, c.optimizer);
    std::optional<JointNumericalRadius> w_t_esc;
    auto escalated = [&]() -> const JointNumericalRadius& {
      if (!w_t_esc) w_t_esc = joint_numerical_radius(t, c.optimizer.escalated());
      return *w_t_esc;
    };
    c.optimized("nr.lower_bound", 0.5 * inv_sqrt_d * n_t, w_t.value,
                [&] { return std::max(w_t.value, escalated().value); });
    optimized(
        c, "nr.le_hypo", [&] { return w_t.value; }, [&] { return h_t.value(); }, [&] { return h_t.escalated(); });
    c.exact("nr.le_norm", w_t.value, n_t);
    c.exact("nr.le_euclidean", w_t.value, n_e);
    c.equality("nr.routes_agree", w_t.vector_route.value, w_t.combination_route.value, 1e-6, [&] {
      const auto& e = escalated();
      return std::pair{std::max(w_t.vector_route.value, e.vector_route.value),
                       std::max(w_t.combination_route.value, e.combination_route.value)};
    });
  }

  heinz_matrix_checks(c, shape.n);
}

void section3(TrialContext& c) {
  const Shape shape = sample_shape(c);
  const OperatorTuple t = random_tuple(shape.d, shape.n, c.rng, shape.ensemble);
  const double param = uniform(c.rng, 0.0, 1.0);
  const double lam = lambda_grid(c.rng);
  const double p = pick(c.rng, kSuiteP);
  const double r0 = std::min(param, 1.0 - param);
  const auto d = static_cast<double>(shape.d);
  c.fingerprint.t = param;
  c.fingerprint.lambda = lam;
  c.fingerprint.p = p;
  c.set_subject(t);

  const SphericalPolar polar = spherical_polar(t);
  const OperatorTuple tilde = aluthge(polar);
  const OperatorTuple hat_t = heinz(polar, param);
  const OperatorTuple hat = mean(t, polar);
  const OperatorTuple dug = duggal(polar);
  const OperatorTuple m_lam = lambda_mean(t, polar, lam);

  auto sp = [p](const OperatorTuple& x) { return schatten_spherical_norm(x, p); };
  const double n_t = sp(t), n_til = sp(tilde), n_ht = sp(hat_t), n_hat = sp(hat), n_d = sp(dug), n_m = sp(m_lam);
  const double dp = std::pow(d, 1.0 / p);

  c.exact("sp.lmean.bound", n_m, (lam + (1.0 - lam) * dp) * n_t);
  c.exact("sp.duggal.bound", n_d, dp * n_t);

  const double n_t2 = schatten_spherical_norm(t, 2.0);
  c.exact("s2.duggal.sqrt_n", schatten_spherical_norm(dug, 2.0), std::sqrt(static_cast<double>(shape.n)) * n_t2);
  const double root_min = std::sqrt(static_cast<double>(std::min<Index>(shape.n, static_cast<Index>(shape.d))));
  c.exact("s2.lmean.sqrt_min", schatten_spherical_norm(m_lam, 2.0), (lam + (1.0 - lam) * root_min) * n_t2);

  const double mix = 2.0 * r0 * n_til + (1.0 - 2.0 * r0) * n_hat;
  c.exact("sp.heinz.le_r0_mix", n_ht, mix);
  c.exact("sp.r0_mix.le_mean", mix, n_hat);
  c.exact("sp.aluthge.le_heinz", n_til, n_ht);
  c.exact("sp.heinz.le_mean", n_ht, n_hat);
  c.exact("sp.mean.bound", n_hat, 0.5 * (1.0 + dp) * n_t);
  const double interp = 0.5 * (std::pow(n_d, param) * std::pow(n_t, 1.0 - param) +
                               std::pow(n_d, 1.0 - param) * std::pow(n_t, param));
  c.exact("sp.heinz.le_interp", n_ht, interp);
  c.exact("sp.interp.le_dpow", interp, 0.5 * (std::pow(d, param / p) + std::pow(d, (1.0 - param) / p)) * n_t);

  double coord = 0.0, acc = 0.0;
  for (const auto& x : t) {
    const double v = schatten_norm(x, p);
    coord = std::max(coord, v);
    acc += std::pow(v, p);
  }
  c.exact("sp.coordinate.le_norm", coord, n_t);

  const double tol = 1e-9 * (1.0 + n_t);
  const double block = schatten_norm(block_embedding(t, polar).t_block, p);
  const double via_p = schatten_norm(polar.p, p);
  const double worst = std::abs(block - n_t) > std::abs(via_p - n_t) ? block : via_p;
  c.equality("sp.block.identity", n_t, worst, tol);
  std::vector<ComplexMatrix> coords(t.begin(), t.end());
  c.equality("sp.direct_sum.identity", schatten_norm(direct_sum(coords), p), std::pow(acc, 1.0 / p), tol);
}

void section4(TrialContext& c) {
  const Shape shape = sample_shape(c);
  const OperatorTuple t = random_tuple(shape.d, shape.n, c.rng, shape.ensemble);
  const double p = pick(c.rng, kSuiteP);
  const auto d = static_cast<double>(shape.d);
  c.fingerprint.p = p;
  c.set_subject(t);

  auto hypo = [&c, &t](double q) {
    return c.sup([t, q](const OptimizerConfig& oc) { return schatten_hypo_norm(t, q, oc).value; });
  };
  auto radius = [&c, &t](double q) {
    return c.sup([t, q](const OptimizerConfig& oc) { return schatten_p_numerical_radius(t, q, oc).value; });
  };
  LazySup h = hypo(p), w = radius(p);
  const double n_sp = schatten_spherical_norm(t, p);
  const double cpd = p < 2.0 ? std::pow(d, -1.0 / p) : 1.0 / std::sqrt(d);

  optimized(
      c, "s4.nr.le_hypo", [&] { return w.value(); }, [&] { return h.value(); }, [&] { return h.escalated(); });
  if (c.wants("s4.hypo.le_sp")) c.exact("s4.hypo.le_sp", h.value(), n_sp);
  optimized(
      c, "s4.half_hypo.le_nr", [&] { return 0.5 * h.value(); }, [&] { return w.value(); },
      [&] { return w.escalated(); });
  optimized(
      c, "s4.hypo.lower_bound", [&] { return cpd * n_sp; }, [&] { return h.value(); },
      [&] { return h.escalated(); });
  optimized(
      c, "s4.nr.lower_bound", [&] { return 0.5 * cpd * n_sp; }, [&] { return w.value(); },
      [&] { return w.escalated(); });

  c.fingerprint.p = 2.0;
  LazySup h2 = p == 2.0 ? h : hypo(2.0);
  LazySup w2 = p == 2.0 ? w : radius(2.0);
  const double n_sp2 = schatten_spherical_norm(t, 2.0);
  const double inv_root2 = 1.0 / std::sqrt(2.0);
  optimized(
      c, "s4.p2.sp_le_hypo", [&] { return n_sp2 / std::sqrt(2.0 * d); }, [&] { return inv_root2 * h2.value(); },
      [&] { return inv_root2 * h2.escalated(); });
  optimized(
      c, "s4.p2.hypo_le_nr", [&] { return inv_root2 * h2.value(); }, [&] { return w2.value(); },
      [&] { return w2.escalated(); });
  if (c.wants("s4.p2.hypo_gram")) {
    const double gram = schatten_hypo_norm_gram(t);
    c.equality("s4.p2.hypo_gram", h2.value(), gram, 1e-6, [&] { return std::pair{h2.escalated(), gram}; });
  }
  c.equality("s4.adjoint.s2", n_sp2, schatten_spherical_norm(adjoint_tuple(t), 2.0), 1e-9 * (1.0 + n_sp2));

  // Power sums of positive families.
  std::vector<ComplexMatrix> family;
  ComplexMatrix total = ComplexMatrix::Zero(shape.n, shape.n);
  for (std::size_t k = 0; k < shape.d; ++k) {
    family.push_back(random_psd(shape.n, c.rng));
    total += family.back();
  }
  const double r_concave = uniform(c.rng, 0.05, 0.95);
  const double r_convex = uniform(c.rng, 1.0, 3.0);
  c.set_subject(OperatorTuple(family));
  c.fingerprint.ensemble = "psd";
  c.fingerprint.p = p;
  auto power_sum = [&](double r) {
    ComplexMatrix s = ComplexMatrix::Zero(shape.n, shape.n);
    for (const auto& a : family) s += psd_power(a, r);
    return s;
  };
  {
    c.fingerprint.r = r_concave;
    const ComplexMatrix lhs = psd_power(total, r_concave), rhs = power_sum(r_concave);
    c.exact("s4.rmon.concave", schatten_norm(lhs, p), schatten_norm(rhs, p));
    c.exact("s4.rmon.concave.op", operator_norm(lhs), operator_norm(rhs));
  }
  {
    c.fingerprint.r = r_convex;
    const double factor = std::pow(d, r_convex - 1.0);
    const ComplexMatrix lhs = psd_power(total, r_convex), rhs = power_sum(r_convex);
    c.exact("s4.rmon.convex", schatten_norm(lhs, p), factor * schatten_norm(rhs, p));
    c.exact("s4.rmon.convex.op", operator_norm(lhs), factor * operator_norm(rhs));
  }
}

// A, B = U diag(a) U*, W diag(b) W* sharing eigenvalue levels, and X = U M W*
// with M supported where the levels match, so AX = XB.
struct Intertwined {
  ComplexMatrix a, b, x;
};

Intertwined intertwined_triple(Index n, Rng& rng) {
  const int levels = uniform_int(rng, 1, static_cast<int>(n));
  std::vector<double> value(static_cast<std::size_t>(levels));
  for (auto& v : value) v = uniform(rng, 0.2, 2.0);
  std::vector<int> la(static_cast<std::size_t>(n)), lb(static_cast<std::size_t>(n));
  for (auto& l : la) l = uniform_int(rng, 0, levels - 1);
  for (auto& l : lb) l = uniform_int(rng, 0, levels - 1);
  const ComplexMatrix u = random_unitary(n, rng), w = random_unitary(n, rng);
  RealVector da(n), db(n);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    da(i) = value[static_cast<std::size_t>(la[static_cast<std::size_t>(i)])];
    db(i) = value[static_cast<std::size_t>(lb[static_cast<std::size_t>(i)])];
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (la[static_cast<std::size_t>(i)] == lb[static_cast<std::size_t>(j)]) m(i, j) = complex_gaussian(rng);
    }
  }
  return {u * da.cast<Complex>().asDiagonal() * u.adjoint(), w * db.cast<Complex>().asDiagonal() * w.adjoint(),
          u * m * w.adjoint()};
}

struct HeinzSides {
  double geo2, mix, sum;
};

HeinzSides heinz_sides(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double nu,
                       double p) {
  const ComplexMatrix mix = psd_power(a, nu) * x * psd_power(b, 1.0 - nu) + psd_power(a, 1.0 - nu) * x * psd_power(b, nu);
  return {2.0 * schatten_norm(psd_power(a, 0.5) * x * psd_power(b, 0.5), p), schatten_norm(mix, p),
          schatten_norm(a * x + x * b, p)};
}

void equality(TrialContext& c) {
  const auto d = static_cast<std::size_t>(uniform_int(c.rng, 1, c.config.dmax));
  const Index n = uniform_int(c.rng, std::min(2, c.config.nmax), c.config.nmax);
  const double param = off_center_t(c.rng);
  const double p = pick(c.rng, kStrictP);
  c.fingerprint.d = static_cast<int>(d);
  c.fingerprint.n = static_cast<int>(n);
  c.fingerprint.t = param;
  c.fingerprint.p = p;
  auto sp = [p](const OperatorTuple& x) { return schatten_spherical_norm(x, p); };

  c.fingerprint.ensemble = "normal";
  const OperatorTuple normal = random_normal_tuple(d, n, c.rng);
  c.set_subject(normal);
  {
    const SphericalPolar polar = spherical_polar(normal);
    c.equality("eq.normal.heinz_eq_mean", sp(heinz(polar, param)), sp(mean(normal, polar)), 1e-9);
  }
  c.fingerprint.ensemble = "normal-invertible";
  const OperatorTuple invertible = random_normal_tuple(d, n, c.rng, true);
  c.set_subject(invertible);
  {
    const SphericalPolar polar = spherical_polar(invertible);
    c.equality("eq.normal_invertible.aluthge_eq_heinz", sp(aluthge(polar)), sp(heinz(polar, param)), 1e-9);
  }

  c.fingerprint.ensemble = "commuting";
  const OperatorTuple comm = random_commuting_tuple(d, n, c.rng);
  c.set_subject(comm);
  {
    const SphericalPolar polar = spherical_polar(comm);
    const double n_ht = sp(heinz(polar, param));
    c.strict_gap("eq.nonnormal.heinz_gap", n_ht, sp(mean(comm, polar)), 1e-6);
    c.strict_gap("eq.nonnormal_invertible.aluthge_gap", sp(aluthge(polar)), n_ht, 1e-6);
  }

  c.fingerprint.ensemble = "intertwined";
  c.fingerprint.d = 1;
  {
    const Intertwined tri = intertwined_triple(n, c.rng);
    c.set_subject(as_tuple({tri.a, tri.b, tri.x}));
    const HeinzSides s = heinz_sides(tri.a, tri.b, tri.x, param, p);
    const double tol = 1e-9 * (1.0 + s.sum);
    c.equality("eq.heinz_sum.intertwining", s.mix, s.sum, tol);
    c.equality("eq.heinz_geo.intertwining", s.geo2, s.mix, tol);
  }
  c.fingerprint.ensemble = "psd";
  {
    const ComplexMatrix a = random_psd(n, c.rng, true), b = random_psd(n, c.rng, true);
    const ComplexMatrix x = ginibre_matrix(n, n, c.rng) / std::sqrt(static_cast<double>(n));
    c.set_subject(as_tuple({a, b, x}));
    const HeinzSides s = heinz_sides(a, b, x, param, p);
    c.strict_gap("eq.heinz_sum.generic_gap", s.mix, s.sum, 1e-6);
    c.strict_gap("eq.heinz_geo.generic_gap", s.geo2, s.mix, 1e-6);
  }
}

void zero(TrialContext& c) {
  const auto d = static_cast<std::size_t>(uniform_int(c.rng, 1, c.config.dmax));
  const Index n = uniform_int(c.rng, 2, std::max(2, c.config.nmax));
  const double param = open_unit(c.rng);
  c.fingerprint.d = static_cast<int>(d);
  c.fingerprint.n = static_cast<int>(n);
  c.fingerprint.t = param;

  c.fingerprint.ensemble = "nilpotent";
  const OperatorTuple nil = random_tuple(d, n, c.rng, Ensemble::Nilpotent);
  c.set_subject(nil);
  {
    const SphericalPolar polar = spherical_polar(nil);
    c.at_most("zero.nilpotent.square", max_norm(tuple_power(nil, 2)), 1e-12);
    c.at_most("zero.nilpotent.gen_aluthge", max_norm(generalized_aluthge(polar, param)), 1e-10);
    c.at_most("zero.nilpotent.heinz", max_norm(heinz(polar, param)), 1e-10);
    c.at_most("zero.mean_nonzero", 1e-10, max_norm(mean(nil, polar)));
  }

  c.fingerprint.ensemble = "ginibre";
  const OperatorTuple gin = random_tuple(d, n, c.rng, Ensemble::Ginibre);
  c.set_subject(gin);
  {
    const SphericalPolar polar = spherical_polar(gin);
    c.at_most("zero.ginibre.square_nonzero", 1e-10, max_norm(tuple_power(gin, 2)));
    c.at_most("zero.ginibre.gen_aluthge_nonzero", 1e-10, max_norm(generalized_aluthge(polar, param)));
    c.at_most("zero.ginibre.heinz_nonzero", 1e-10, max_norm(heinz(polar, param)));
    c.at_most("zero.mean_nonzero", 1e-10, max_norm(mean(gin, polar)));
  }

  if (c.fingerprint.trial == 0) {
    c.fingerprint.ensemble = "zero";
    const OperatorTuple z = OperatorTuple::zero(d, n);
    c.set_subject(z);
    c.at_most("zero.zero_tuple.mean", max_norm(mean(z)), 0.0);
  }
}

OperatorTuple example_tuple(bool diagonal) {
  ComplexMatrix t1 = ComplexMatrix::Zero(2, 2), t2 = ComplexMatrix::Zero(2, 2);
  t1(0, 0) = 1.0;
  if (diagonal) {
    t2(1, 1) = 1.0;
  } else {
    t2(1, 0) = 1.0;
  }
  return as_tuple({t1, t2});
}

void sharpness(TrialContext& c) {
  const int i = c.fingerprint.trial;
  const bool diagonal = i >= static_cast<int>(kExampleP.size());
  const double p = kExampleP[static_cast<std::size_t>(i) % kExampleP.size()];
  const OperatorTuple t = example_tuple(diagonal);
  c.fingerprint.ensemble = diagonal ? "example-diagonal" : "example-rank-one";
  c.fingerprint.d = 2;
  c.fingerprint.n = 2;
  c.fingerprint.p = p;
  c.set_subject(t);

  const double sp = schatten_spherical_norm(t, p);
  LazySup h = c.sup([t, p](const OptimizerConfig& oc) { return schatten_hypo_norm(t, p, oc).value; });
  auto with_hypo = [&](double target) {
    return [&h, target] { return std::pair{h.escalated(), target}; };
  };
  constexpr double tol = 1e-8;
  if (!diagonal) {
    c.equality("sharp.rank_one.sp_norm", sp, std::sqrt(2.0), tol);
    if (c.wants("sharp.rank_one.hypo")) c.equality("sharp.rank_one.hypo", h.value(), 1.0, tol, with_hypo(1.0));
    if (c.wants("sharp.rank_one.scaled")) {
      c.equality("sharp.rank_one.scaled", sp / std::sqrt(2.0), h.value(), tol,
                 [&] { return std::pair{sp / std::sqrt(2.0), h.escalated()}; });
    }
  } else {
    c.equality("sharp.diagonal.sp_scaled", std::pow(2.0, -1.0 / p) * sp, 1.0, tol);
    if (c.wants("sharp.diagonal.hypo")) c.equality("sharp.diagonal.hypo", h.value(), 1.0, tol, with_hypo(1.0));
    if (c.wants("sharp.diagonal.hypo_closed_form")) {
      const double closed = std::max(1.0, std::pow(2.0, 1.0 / p - 0.5));
      c.equality("sharp.diagonal.hypo_closed_form", h.value(), closed, tol, with_hypo(closed));
    }
  }
}

}  // namespace

TrialFn section2_trial() { return section2; }
TrialFn section3_trial() { return section3; }
TrialFn section4_trial() { return section4; }
TrialFn equality_trial() { return equality; }
TrialFn zero_trial() { return zero; }
TrialFn sharpness_trial() { return sharpness; }
int sharpness_trial_count() { return static_cast<int>(2 * kExampleP.size()); }

}  // namespace sphertrans::detail
