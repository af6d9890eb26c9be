#include "sphertrans/predicates.hpp"

#include <algorithm>
#include <cmath>

namespace sphertrans {

namespace {

PredicateResult make(double residual, double tol) { return {residual <= tol, residual, tol}; }

double negative_part_of_min_eigenvalue(const ComplexMatrix& h) {
  const RealVector eig = hermitian_eigenvalues(real_part(h));
  return std::max(0.0, -eig.minCoeff());
}

}  // namespace

double default_predicate_tolerance(const OperatorTuple& t) {
  const double nrm = std::sqrt(operator_norm(gram_sum(t)));
  return 1e-9 * (1.0 + nrm * nrm);
}

double default_predicate_tolerance(const ComplexMatrix& a) {
  const double nrm = operator_norm(a);
  return 1e-9 * (1.0 + nrm * nrm);
}

PredicateResult is_commuting(const OperatorTuple& t, std::optional<double> tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) worst = std::max(worst, operator_norm(commutator(t[i], t[j])));
  }
  return make(worst, tol.value_or(default_predicate_tolerance(t)));
}

PredicateResult is_normal_single(const ComplexMatrix& a, std::optional<double> tol) {
  require_square_finite(a, "matrix");
  const double residual = operator_norm(a.adjoint() * a - a * a.adjoint());
  return make(residual, tol.value_or(default_predicate_tolerance(a)));
}

PredicateResult is_normal_tuple(const OperatorTuple& t, std::optional<double> tol) {
  const double tolerance = tol.value_or(default_predicate_tolerance(t));
  double worst = is_commuting(t, tolerance).residual;
  for (const auto& c : t) worst = std::max(worst, is_normal_single(c, tolerance).residual);
  return make(worst, tolerance);
}

PredicateResult is_quasinormal_single(const ComplexMatrix& a, std::optional<double> tol) {
  require_square_finite(a, "matrix");
  const ComplexMatrix gram = a.adjoint() * a;
  const double residual = operator_norm(a * gram - gram * a);
  return make(residual, tol.value_or(default_predicate_tolerance(a)));
}

PredicateResult is_hyponormal_single(const ComplexMatrix& a, std::optional<double> tol) {
  require_square_finite(a, "matrix");
  const double residual = negative_part_of_min_eigenvalue(a.adjoint() * a - a * a.adjoint());
  return make(residual, tol.value_or(default_predicate_tolerance(a)));
}

ComplexMatrix joint_commutator_matrix(const OperatorTuple& t) {
  const Index n = t.dim();
  const auto d = static_cast<Index>(t.size());
  ComplexMatrix m(d * n, d * n);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const auto& ti = t[static_cast<std::size_t>(i)];
      const auto& tj = t[static_cast<std::size_t>(j)];
      m.block(i * n, j * n, n, n) = tj.adjoint() * ti - ti * tj.adjoint();
    }
  }
  return m;
}

PredicateResult is_jointly_hyponormal(const OperatorTuple& t, std::optional<double> tol) {
  const double residual = negative_part_of_min_eigenvalue(joint_commutator_matrix(t));
  return make(residual, tol.value_or(default_predicate_tolerance(t)));
}

PredicateResult spherically_quasinormal_commutant(const OperatorTuple& t, std::optional<double> tol) {
  const double tolerance = tol.value_or(default_predicate_tolerance(t));
  const ComplexMatrix p2 = gram_sum(t);
  double worst = 0.0;
  for (const auto& c : t) worst = std::max(worst, operator_norm(commutator(c, p2)));
  PredicateResult res = make(worst, tolerance);
  res.holds = res.holds && is_commuting(t, tolerance).holds;
  return res;
}

PredicateResult spherically_quasinormal_block(const OperatorTuple& t, std::optional<double> tol) {
  const double tolerance = tol.value_or(default_predicate_tolerance(t));
  const auto comm = is_commuting(t, tolerance);
  if (!comm.holds) {
    throw Error(ErrorCode::NotCommuting,
                "block characterization needs a commuting tuple (residual " + std::to_string(comm.residual) + ")");
  }
  const BlockEmbedding emb = block_embedding(t);
  const double residual = operator_norm(emb.p_block * emb.v_block - emb.v_block * emb.p_block);
  return make(residual, tolerance);
}

SphericalQuasinormality is_spherically_quasinormal(const OperatorTuple& t, std::optional<double> tol) {
  const double tolerance = tol.value_or(default_predicate_tolerance(t));
  SphericalQuasinormality out;
  out.commutant = spherically_quasinormal_commutant(t, tolerance);
  if (is_commuting(t, tolerance).holds) out.block = spherically_quasinormal_block(t, tolerance);
  return out;
}

PredicateResult is_square_zero(const OperatorTuple& t, std::optional<double> tol) {
  return make(max_coordinate_norm(tuple_power(t, 2)), tol.value_or(default_predicate_tolerance(t)));
}

PredicateResult taylor_invertibility_proxy(const OperatorTuple& t) {
  const SphericalPolar polar = spherical_polar(t);
  const double smallest = polar.eigenvalues.minCoeff();
  return {smallest > polar.rank_tol, smallest, polar.rank_tol};
}

Classification classify(const OperatorTuple& t, std::optional<double> tol) {
  Classification c;
  c.tolerance = tol.value_or(default_predicate_tolerance(t));
  c.commuting = is_commuting(t, c.tolerance);
  c.normal = is_normal_tuple(t, c.tolerance);
  for (const auto& coord : t) {
    c.coordinate_normal.push_back(is_normal_single(coord, c.tolerance));
    c.coordinate_quasinormal.push_back(is_quasinormal_single(coord, c.tolerance));
    c.coordinate_hyponormal.push_back(is_hyponormal_single(coord, c.tolerance));
  }
  c.jointly_hyponormal = is_jointly_hyponormal(t, c.tolerance);
  c.spherically_quasinormal = is_spherically_quasinormal(t, c.tolerance);
  c.square_zero = is_square_zero(t, c.tolerance);
  c.taylor_proxy = taylor_invertibility_proxy(t);
  return c;
}

}  // namespace sphertrans
