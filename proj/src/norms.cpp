#include "sphertrans/norms.hpp"

#include <algorithm>
#include <cmath>

namespace sphertrans {

namespace detail {

double fast_operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
  const ComplexMatrix h = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
}

double hermitian_top_eigenvalue(const ComplexMatrix& h) {
  if (h.rows() == 1) return h(0, 0).real();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

double hermitian_schatten_norm(const ComplexMatrix& h, double p) {
  if (h.rows() == 1) return std::abs(h(0, 0).real());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return schatten_from_singular_values(solver.eigenvalues().cwiseAbs(), p);
}

double fast_schatten_norm(const ComplexMatrix& a, double p) {
  // ‖A‖₂ is the Frobenius norm exactly.
  if (p == 2.0) return a.norm();
  Eigen::JacobiSVD<ComplexMatrix> solver(a);
  return schatten_from_singular_values(solver.singularValues(), p);
}

}  // namespace detail

namespace {

ComplexMatrix rotated_real_part(const ComplexMatrix& a, double theta) {
  const Complex phase = std::polar(1.0, theta);
  return 0.5 * (phase * a + std::conj(phase) * a.adjoint());
}

// Σ λ_k T_k into a preallocated buffer.
void accumulate(const OperatorTuple& t, std::span<const Complex> lambda, ComplexMatrix& out) {
  out.setZero(t.dim(), t.dim());
  for (std::size_t k = 0; k < t.size(); ++k) out += lambda[k] * t[k];
}

}  // namespace

double spherical_norm(const OperatorTuple& t) { return std::sqrt(operator_norm(gram_sum(t))); }

double euclidean_norm(const OperatorTuple& t) {
  double acc = 0.0;
  for (const auto& c : t) acc += std::pow(operator_norm(c), 2);
  return std::sqrt(acc);
}

double schatten_spherical_norm(const OperatorTuple& t, double p) {
  require_schatten_p(p);
  // Singular values of the stacked column are the eigenvalues of P.
  return schatten_from_singular_values(singular_values(stacked_column(t)), p);
}

SupremumEstimate hypo_norm(const OperatorTuple& t, const OptimizerConfig& config) {
  ComplexMatrix buf;
  auto objective = [&](std::span<const Complex> lambda) {
    accumulate(t, lambda, buf);
    return detail::fast_operator_norm(buf);
  };
  SupremumEstimate est = sphere_optimize(objective, t.size(), config, PhaseGauge::Fixed);
  est.value = operator_norm(combination(t, est.argmax.lambda));
  return est;
}

double numerical_radius_single(const ComplexMatrix& a) {
  require_square_finite(a, "numerical radius argument");
  auto f = [&](double theta) { return detail::hermitian_top_eigenvalue(rotated_real_part(a, theta)); };
  return std::max(maximize_over_phase(f, 720, 1e-10).value, 0.0);
}

PhaseMaximum schatten_numerical_radius_single(const ComplexMatrix& a, double p) {
  require_schatten_p(p);
  require_square_finite(a, "Schatten numerical radius argument");
  auto f = [&](double theta) { return detail::hermitian_schatten_norm(rotated_real_part(a, theta), p); };
  return maximize_over_phase(f, 360, 1e-10);
}

JointNumericalRadius joint_numerical_radius(const OperatorTuple& t, const OptimizerConfig& config) {
  JointNumericalRadius out;
  const Index n = t.dim();

  Eigen::VectorXcd x(n);
  auto vector_objective = [&](std::span<const Complex> v) {
    for (Index i = 0; i < n; ++i) x(i) = v[static_cast<std::size_t>(i)];
    double acc = 0.0;
    for (const auto& c : t) acc += std::norm(x.dot(c * x));
    return std::sqrt(acc);
  };
  out.vector_route = sphere_optimize(vector_objective, static_cast<std::size_t>(n), config, PhaseGauge::Fixed);

  // sup_λ ω(Σλ_kT_k) = sup over the full sphere of λ_max(Re(Σλ_kT_k)): the
  // phase e^{iθ} is absorbed into λ. The winner is then polished with the
  // dedicated single-operator numerical radius.
  ComplexMatrix buf;
  auto combination_objective = [&](std::span<const Complex> lambda) {
    accumulate(t, lambda, buf);
    return detail::hermitian_top_eigenvalue(0.5 * (buf + buf.adjoint()));
  };
  OptimizerConfig comb_config = config;
  comb_config.seed = config.seed + 1;
  out.combination_route = sphere_optimize(combination_objective, t.size(), comb_config, PhaseGauge::Free);
  out.combination_route.argmax.lambda = canonical_phase(out.combination_route.argmax.lambda);
  const ComplexMatrix best = combination(t, out.combination_route.argmax.lambda);
  auto f = [&](double theta) { return detail::hermitian_top_eigenvalue(rotated_real_part(best, theta)); };
  const PhaseMaximum polished = maximize_over_phase(f, 720, 1e-10);
  out.combination_route.value = std::max(polished.value, 0.0);
  out.combination_route.theta = polished.theta;

  out.value = std::max(out.vector_route.value, out.combination_route.value);
  out.discrepancy = std::abs(out.vector_route.value - out.combination_route.value);
  return out;
}

SupremumEstimate schatten_hypo_norm(const OperatorTuple& t, double p, const OptimizerConfig& config) {
  require_schatten_p(p);
  ComplexMatrix buf;
  auto objective = [&](std::span<const Complex> lambda) {
    accumulate(t, lambda, buf);
    return detail::fast_schatten_norm(buf, p);
  };
  SupremumEstimate est = sphere_optimize(objective, t.size(), config, PhaseGauge::Fixed);
  est.value = schatten_norm(combination(t, est.argmax.lambda), p);
  return est;
}

double schatten_hypo_norm_gram(const OperatorTuple& t) {
  const auto d = static_cast<Index>(t.size());
  ComplexMatrix g(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index k = 0; k < d; ++k) {
      g(j, k) = (t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(j)].adjoint()).trace();
    }
  }
  const RealVector eig = hermitian_eigenvalues(real_part(g));
  return std::sqrt(std::max(eig.maxCoeff(), 0.0));
}

SupremumEstimate schatten_p_numerical_radius(const OperatorTuple& t, double p, const OptimizerConfig& config) {
  require_schatten_p(p);
  ComplexMatrix buf;
  auto objective = [&](std::span<const Complex> lambda) {
    accumulate(t, lambda, buf);
    return detail::hermitian_schatten_norm(0.5 * (buf + buf.adjoint()), p);
  };
  SupremumEstimate est = sphere_optimize(objective, t.size(), config, PhaseGauge::Free);
  est.argmax.lambda = canonical_phase(est.argmax.lambda);
  const PhaseMaximum polished = schatten_numerical_radius_single(combination(t, est.argmax.lambda), p);
  est.value = polished.value;
  est.theta = polished.theta;
  return est;
}

}  // namespace sphertrans
