#include "sphertrans/tuple.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sphertrans {

OperatorTuple::OperatorTuple(std::vector<ComplexMatrix> coordinates) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw Error(ErrorCode::DimensionMismatch, "a tuple needs at least one coordinate");
  const Index n = coords_.front().rows();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto name = "coordinate " + std::to_string(i + 1);
    require_square_finite(coords_[i], name.c_str());
    if (coords_[i].rows() != n) {
      throw Error(ErrorCode::DimensionMismatch, name + " is " + std::to_string(coords_[i].rows()) +
                                                    "x" + std::to_string(coords_[i].cols()) +
                                                    ", expected " + std::to_string(n));
    }
  }
}

OperatorTuple OperatorTuple::zero(std::size_t d, Index n) {
  return OperatorTuple(std::vector<ComplexMatrix>(d, ComplexMatrix::Zero(n, n)));
}

ComplexMatrix gram_sum(const OperatorTuple& t) {
  const Index n = t.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& c : t) sum.noalias() += c.adjoint() * c;
  return sum;
}

ComplexMatrix stacked_column(const OperatorTuple& t) {
  const Index n = t.dim();
  ComplexMatrix col(n * static_cast<Index>(t.size()), n);
  for (std::size_t k = 0; k < t.size(); ++k) col.middleRows(static_cast<Index>(k) * n, n) = t[k];
  return col;
}

ComplexMatrix combination(const OperatorTuple& t, std::span<const Complex> lambda) {
  if (lambda.size() != t.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient count " + std::to_string(lambda.size()) +
                                                  " != tuple size " + std::to_string(t.size()));
  }
  ComplexMatrix sum = ComplexMatrix::Zero(t.dim(), t.dim());
  for (std::size_t k = 0; k < t.size(); ++k) sum += lambda[k] * t[k];
  return sum;
}

OperatorTuple affine_combination(double a, const OperatorTuple& s, double b, const OperatorTuple& r) {
  if (s.size() != r.size() || s.dim() != r.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "tuples differ in shape");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(a * s[k] + b * r[k]);
  return OperatorTuple(std::move(out));
}

double max_coordinate_distance(const OperatorTuple& a, const OperatorTuple& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "tuples differ in shape");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, operator_norm(a[k] - b[k]));
  return worst;
}

double max_coordinate_norm(const OperatorTuple& t) {
  double worst = 0.0;
  for (const auto& c : t) worst = std::max(worst, operator_norm(c));
  return worst;
}

ComplexMatrix SphericalPolar::power(double t) const {
  const Index n = p.rows();
  if (t == 0.0) return ComplexMatrix::Identity(n, n);
  RealVector powered(n);
  for (Index k = 0; k < n; ++k) powered(k) = eigenvalues(k) > 0.0 ? std::pow(eigenvalues(k), t) : 0.0;
  return spectral_apply(basis, powered);
}

ComplexMatrix SphericalPolar::pseudo_inverse() const {
  RealVector inv(eigenvalues.size());
  for (Index k = 0; k < inv.size(); ++k) inv(k) = eigenvalues(k) > 0.0 ? 1.0 / eigenvalues(k) : 0.0;
  return spectral_apply(basis, inv);
}

ComplexMatrix SphericalPolar::range_projection() const {
  RealVector ind(eigenvalues.size());
  for (Index k = 0; k < ind.size(); ++k) ind(k) = eigenvalues(k) > 0.0 ? 1.0 : 0.0;
  return spectral_apply(basis, ind);
}

ComplexMatrix SphericalPolar::initial_projection() const {
  const Index n = p.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& vk : v) sum.noalias() += vk.adjoint() * vk;
  return sum;
}

namespace {

struct ColumnSpectrum {
  ComplexMatrix basis;
  RealVector values;
};

ColumnSpectrum column_spectrum(const OperatorTuple& t) {
  // Singular values of the column are the eigenvalues of P and its right
  // singular vectors are eigenvectors of P.
  Eigen::JacobiSVD<ComplexMatrix> solver(stacked_column(t), Eigen::ComputeFullV);
  return {solver.matrixV(), solver.singularValues()};
}

}  // namespace

ComplexMatrix defect_operator(const OperatorTuple& t) {
  const auto spec = column_spectrum(t);
  return spectral_apply(spec.basis, spec.values);
}

SphericalPolar spherical_polar(const OperatorTuple& t) {
  auto spec = column_spectrum(t);
  SphericalPolar polar;
  const double top = spec.values.size() > 0 ? spec.values(0) : 0.0;
  polar.rank_tol = kRankTol * top;
  polar.rank = 0;
  for (Index k = 0; k < spec.values.size(); ++k) {
    if (spec.values(k) > polar.rank_tol && spec.values(k) > 0.0) {
      ++polar.rank;
    } else {
      spec.values(k) = 0.0;
    }
  }
  polar.basis = std::move(spec.basis);
  polar.eigenvalues = std::move(spec.values);
  polar.p = spectral_apply(polar.basis, polar.eigenvalues);
  const ComplexMatrix p_plus = polar.pseudo_inverse();
  polar.v.reserve(t.size());
  for (const auto& c : t) polar.v.push_back(c * p_plus);
  return polar;
}

ComplexMatrix first_column_block(std::span<const ComplexMatrix> column) {
  const Index n = column.front().rows();
  const Index dn = n * static_cast<Index>(column.size());
  ComplexMatrix out = ComplexMatrix::Zero(dn, dn);
  for (std::size_t k = 0; k < column.size(); ++k) out.block(static_cast<Index>(k) * n, 0, n, n) = column[k];
  return out;
}

BlockEmbedding block_embedding(const OperatorTuple& t, const SphericalPolar& polar) {
  BlockEmbedding emb;
  emb.t_block = first_column_block(t.coordinates());
  emb.v_block = first_column_block(polar.v);
  std::vector<ComplexMatrix> diag(t.size(), polar.p);
  emb.p_block = direct_sum(diag);
  return emb;
}

BlockEmbedding block_embedding(const OperatorTuple& t) { return block_embedding(t, spherical_polar(t)); }

OperatorTuple tuple_product(const OperatorTuple& t, const OperatorTuple& s) {
  if (t.dim() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "tuple product needs a common space dimension (" +
                                                  std::to_string(t.dim()) + " vs " +
                                                  std::to_string(s.dim()) + ")");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(t.size() * s.size());
  for (const auto& ti : t) {
    for (const auto& sj : s) out.push_back(ti * sj);
  }
  return OperatorTuple(std::move(out));
}

OperatorTuple tuple_power(const OperatorTuple& t, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "tuple power must be a positive count");
  OperatorTuple acc = t;
  for (int i = 1; i < k; ++i) acc = tuple_product(t, acc);
  return acc;
}

OperatorTuple adjoint_tuple(const OperatorTuple& t) {
  std::vector<ComplexMatrix> out;
  out.reserve(t.size());
  for (const auto& c : t) out.push_back(c.adjoint());
  return OperatorTuple(std::move(out));
}

}  // namespace sphertrans
