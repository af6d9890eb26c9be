#include "sphertrans/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sphertrans {

double BallPoint::norm_squared() const {
  double acc = 0.0;
  for (const auto& z : lambda) acc += std::norm(z);
  return acc;
}

OptimizerConfig OptimizerConfig::escalated() const {
  OptimizerConfig out = *this;
  out.random_starts *= 8;
  out.refine_top *= 2;
  out.screening_samples = std::max<long>(screening_samples, 100000);
  out.seed = seed ^ 0x9e3779b97f4a7c15ULL;
  return out;
}

std::vector<Complex> canonical_phase(std::span<const Complex> lambda) {
  std::vector<Complex> out(lambda.begin(), lambda.end());
  for (const auto& z : out) {
    if (std::abs(z) > 1e-12) {
      const Complex rot = std::conj(z) / std::abs(z);
      for (auto& w : out) w *= rot;
      break;
    }
  }
  return out;
}

namespace {

using Vec = Eigen::VectorXd;

// Real coordinates of the search space. With a fixed gauge λ₁ has no
// imaginary part, leaving 2d − 1 parameters.
class SphereChart {
 public:
  SphereChart(std::size_t d, PhaseGauge gauge) : d_(d), fixed_(gauge == PhaseGauge::Fixed) {}

  Index dim() const { return static_cast<Index>(2 * d_) - (fixed_ ? 1 : 0); }

  void to_point(const Vec& y, std::vector<Complex>& lambda) const {
    lambda.resize(d_);
    Index j = 0;
    for (std::size_t k = 0; k < d_; ++k) {
      if (k == 0 && fixed_) {
        lambda[k] = Complex(y(j++), 0.0);
      } else {
        const double re = y(j++);
        const double im = y(j++);
        lambda[k] = Complex(re, im);
      }
    }
    double nrm = 0.0;
    for (const auto& z : lambda) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm > 0.0) {
      for (auto& z : lambda) z /= nrm;
    }
  }

  Vec from_point(std::span<const Complex> lambda) const {
    std::vector<Complex> l = fixed_ ? canonical_phase(lambda) : std::vector<Complex>(lambda.begin(), lambda.end());
    Vec y(dim());
    Index j = 0;
    for (std::size_t k = 0; k < d_; ++k) {
      y(j++) = l[k].real();
      if (!(k == 0 && fixed_)) y(j++) = l[k].imag();
    }
    return y;
  }

 private:
  std::size_t d_;
  bool fixed_;
};

void project(Vec& y) {
  const double nrm = y.norm();
  if (nrm > 0.0) y /= nrm;
}

struct LocalResult {
  Vec point;
  double value = -std::numeric_limits<double>::infinity();
  bool converged = false;
};

class Evaluator {
 public:
  Evaluator(const SphereObjective& f, const SphereChart& chart) : f_(f), chart_(chart) {}

  double operator()(const Vec& y) {
    ++count;
    chart_.to_point(y, scratch_);
    const double v = f_(scratch_);
    return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
  }

  long count = 0;

 private:
  const SphereObjective& f_;
  const SphereChart& chart_;
  std::vector<Complex> scratch_;
};

// Nelder–Mead ascent with every vertex projected back onto the unit sphere.
LocalResult nelder_mead(Evaluator& eval, Vec start, double step, double tol, long max_evals) {
  const Index m = start.size();
  project(start);
  std::vector<Vec> simplex(static_cast<std::size_t>(m + 1), start);
  std::vector<double> values(static_cast<std::size_t>(m + 1));
  for (Index i = 0; i < m; ++i) {
    Vec& v = simplex[static_cast<std::size_t>(i + 1)];
    v(i) += (std::abs(v(i)) > 0.9) ? -step : step;
    project(v);
  }
  const long budget_start = eval.count;
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  LocalResult res;
  while (true) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0.0;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      diameter = std::max(diameter, (simplex[i] - simplex[best]).lpNorm<Eigen::Infinity>());
    }
    if (diameter < tol) {
      res.converged = true;
      break;
    }
    if (eval.count - budget_start > max_evals) break;

    Vec centroid = Vec::Zero(m);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(m);

    auto trial = [&](double coeff) {
      Vec y = centroid + coeff * (simplex[worst] - centroid);
      project(y);
      return y;
    };

    Vec reflected = trial(-1.0);
    const double fr = eval(reflected);
    if (fr > values[best]) {
      Vec expanded = trial(-2.0);
      const double fe = eval(expanded);
      if (fe > fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr > values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr > values[worst];
    Vec contracted = trial(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc > std::max(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      project(simplex[i]);
      values[i] = eval(simplex[i]);
    }
  }
  const auto it = std::max_element(values.begin(), values.end());
  res.point = simplex[static_cast<std::size_t>(it - values.begin())];
  res.value = *it;
  return res;
}

Vec random_unit(std::mt19937_64& rng, Index m) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec y(m);
  for (Index i = 0; i < m; ++i) y(i) = gauss(rng);
  if (y.norm() == 0.0) y(0) = 1.0;
  project(y);
  return y;
}

}  // namespace

SupremumEstimate sphere_optimize(const SphereObjective& objective, std::size_t d,
                                 const OptimizerConfig& config, PhaseGauge gauge) {
  if (d == 0) throw Error(ErrorCode::InvalidParameter, "sphere dimension must be positive");
  SphereChart chart(d, gauge);
  Evaluator eval(objective, chart);
  SupremumEstimate out;

  if (gauge == PhaseGauge::Fixed && d == 1) {
    out.argmax.lambda = {Complex(1.0, 0.0)};
    out.value = objective(out.argmax.lambda);
    out.starts = 1;
    out.evaluations = 1;
    return out;
  }

  const Index m = chart.dim();
  std::mt19937_64 rng(config.seed);
  std::vector<Vec> starts;
  if (config.axis_starts) {
    for (std::size_t k = 0; k < d; ++k) {
      for (const Complex unit : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        std::vector<Complex> lambda(d, Complex(0.0, 0.0));
        lambda[k] = unit;
        starts.push_back(chart.from_point(lambda));
      }
    }
  }
  for (int i = 0; i < config.random_starts; ++i) starts.push_back(random_unit(rng, m));

  if (config.screening_samples > 0) {
    std::vector<std::pair<double, Vec>> best;
    const auto keep = static_cast<std::size_t>(std::max(config.refine_top, 1));
    for (long s = 0; s < config.screening_samples; ++s) {
      Vec y = random_unit(rng, m);
      const double v = eval(y);
      if (best.size() < keep || v > best.back().first) {
        best.emplace_back(v, std::move(y));
        std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        if (best.size() > keep) best.pop_back();
      }
    }
    for (auto& [v, y] : best) starts.push_back(std::move(y));
  }

  std::vector<LocalResult> coarse;
  coarse.reserve(starts.size());
  for (const auto& s : starts) {
    coarse.push_back(nelder_mead(eval, s, 0.3, config.coarse_tol, config.max_evals_per_run));
  }
  std::sort(coarse.begin(), coarse.end(), [](const auto& a, const auto& b) { return a.value > b.value; });

  double lo = coarse.front().value;
  double hi = coarse.front().value;
  for (const auto& c : coarse) {
    lo = std::min(lo, c.value);
    hi = std::max(hi, c.value);
  }
  out.spread = hi - lo;

  LocalResult best = coarse.front();
  bool all_converged = true;
  const std::size_t refine = std::min<std::size_t>(coarse.size(), static_cast<std::size_t>(std::max(config.refine_top, 1)));
  for (std::size_t i = 0; i < refine; ++i) {
    LocalResult r = nelder_mead(eval, coarse[i].point, 1e-2, config.step_tol, config.max_evals_per_run);
    // Restart once from the converged point to guard against simplex collapse.
    LocalResult again = nelder_mead(eval, r.point, 1e-4, config.step_tol, config.max_evals_per_run);
    if (again.value >= r.value) r = again;
    all_converged = all_converged && r.converged;
    if (r.value > best.value) best = r;
  }

  std::vector<Complex> lambda;
  chart.to_point(best.point, lambda);
  if (gauge == PhaseGauge::Fixed) lambda = canonical_phase(lambda);
  out.argmax.lambda = lambda;
  out.value = objective(out.argmax.lambda);
  out.starts = static_cast<int>(starts.size());
  out.converged = all_converged;
  out.evaluations = eval.count + 1;
  return out;
}

PhaseMaximum maximize_over_phase(const std::function<double(double)>& f, int grid_points, double theta_tol) {
  const double two_pi = 2.0 * std::numbers::pi;
  const int count = std::max(grid_points, 3);
  const double h = two_pi / count;
  PhaseMaximum best{0.0, f(0.0)};
  for (int k = 1; k < count; ++k) {
    const double th = h * k;
    const double v = f(th);
    if (v > best.value) best = {th, v};
  }
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best.theta - h;
  double b = best.theta + h;
  double c = b - ratio * (b - a);
  double e = a + ratio * (b - a);
  double fc = f(c);
  double fe = f(e);
  while (b - a > theta_tol) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + ratio * (b - a);
      fe = f(e);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (fm > best.value) best = {mid, fm};
  best.theta = std::fmod(best.theta + two_pi, two_pi);
  return best;
}

}  // namespace sphertrans
