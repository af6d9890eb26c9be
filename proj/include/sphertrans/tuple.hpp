#pragma once
//
// Operator d-tuples T = (T₁,…,T_d) on Cⁿ, treated as the column operator
// Cⁿ → Cⁿ ⊕ ⋯ ⊕ Cⁿ, together with the canonical spherical polar
// decomposition T = V·P and the block embeddings used to transfer tuple norms
// to ordinary matrix norms.
//

#include <span>
#include <vector>

#include "sphertrans/linalg.hpp"

namespace sphertrans {

class OperatorTuple {
 public:
  /// Validates d ≥ 1, every coordinate n×n with a common n ≥ 1, finite entries.
  explicit OperatorTuple(std::vector<ComplexMatrix> coordinates);

  static OperatorTuple zero(std::size_t d, Index n);

  std::size_t size() const noexcept { return coords_.size(); }
  Index dim() const noexcept { return coords_.front().rows(); }

  const ComplexMatrix& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const ComplexMatrix> coordinates() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

 private:
  std::vector<ComplexMatrix> coords_;
};

/// Σ T_k* T_k, i.e. P².
ComplexMatrix gram_sum(const OperatorTuple& t);

/// The dn×n column [T₁; …; T_d].
ComplexMatrix stacked_column(const OperatorTuple& t);

/// Σ λ_k T_k.
ComplexMatrix combination(const OperatorTuple& t, std::span<const Complex> lambda);

/// a·S + b·R coordinatewise.
OperatorTuple affine_combination(double a, const OperatorTuple& s, double b, const OperatorTuple& r);

double max_coordinate_distance(const OperatorTuple& a, const OperatorTuple& b);
double max_coordinate_norm(const OperatorTuple& t);

inline constexpr double kRankTol = 1e-10;

/// T = V·P with P = (Σ T_k*T_k)^{1/2} and V_k = T_k·P⁺.
///
/// P is held spectrally: `basis` holds its eigenvectors and `eigenvalues`
/// the matching eigenvalues, with those below rank_tol = 1e-10·‖P‖ set to
/// exactly zero. Powers, the pseudoinverse and the range projection are all
/// formed from that thresholded spectrum so that they agree on ker(P).
struct SphericalPolar {
  std::vector<ComplexMatrix> v;
  ComplexMatrix p;
  ComplexMatrix basis;
  RealVector eigenvalues;
  Index rank = 0;
  double rank_tol = 0.0;

  /// P^t with the convention P⁰ = I.
  ComplexMatrix power(double t) const;
  ComplexMatrix pseudo_inverse() const;
  ComplexMatrix range_projection() const;
  /// Σ V_k* V_k.
  ComplexMatrix initial_projection() const;
};

/// P computed from the singular values and right singular vectors of the
/// stacked column, so small eigenvalues carry absolute rather than
/// square-root accuracy.
ComplexMatrix defect_operator(const OperatorTuple& t);

SphericalPolar spherical_polar(const OperatorTuple& t);

/// 𝕋 (T_k stacked in the first block column), 𝕍 likewise and ℙ = P ⊕ ⋯ ⊕ P.
struct BlockEmbedding {
  ComplexMatrix t_block;
  ComplexMatrix v_block;
  ComplexMatrix p_block;
};

BlockEmbedding block_embedding(const OperatorTuple& t);
BlockEmbedding block_embedding(const OperatorTuple& t, const SphericalPolar& polar);

/// dn×dn matrix carrying the given n×n blocks in its first block column.
ComplexMatrix first_column_block(std::span<const ComplexMatrix> column);

/// T∘S = (T₁S₁,…,T₁S_m,…,T_dS₁,…,T_dS_m).
OperatorTuple tuple_product(const OperatorTuple& t, const OperatorTuple& s);

/// T¹ = T, T^{k+1} = T∘T^k.
OperatorTuple tuple_power(const OperatorTuple& t, int k);

OperatorTuple adjoint_tuple(const OperatorTuple& t);

}  // namespace sphertrans
