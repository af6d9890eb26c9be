#pragma once
//
// Structural classification of tuples and single matrices. Every predicate
// reports a residual; the flag is `residual <= tolerance`, with a default
// tolerance of 1e-9·(1 + ‖T‖²) since the residuals are quadratic in T.
//

#include <optional>
#include <vector>

#include "sphertrans/tuple.hpp"

namespace sphertrans {

struct PredicateResult {
  bool holds = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

double default_predicate_tolerance(const OperatorTuple& t);
double default_predicate_tolerance(const ComplexMatrix& a);

/// max_{i,j} ‖[T_i, T_j]‖.
PredicateResult is_commuting(const OperatorTuple& t, std::optional<double> tol = {});

/// ‖A*A − AA*‖.
PredicateResult is_normal_single(const ComplexMatrix& a, std::optional<double> tol = {});

/// Commuting and every coordinate normal; residual is the larger of the two.
PredicateResult is_normal_tuple(const OperatorTuple& t, std::optional<double> tol = {});

/// ‖AA*A − A*A²‖.
PredicateResult is_quasinormal_single(const ComplexMatrix& a, std::optional<double> tol = {});

/// max(0, −λ_min(A*A − AA*)).
PredicateResult is_hyponormal_single(const ComplexMatrix& a, std::optional<double> tol = {});

/// max(0, −λ_min) of the d×d block matrix whose (i, j) block is [T_j*, T_i].
PredicateResult is_jointly_hyponormal(const OperatorTuple& t, std::optional<double> tol = {});
ComplexMatrix joint_commutator_matrix(const OperatorTuple& t);

/// Route A: commuting and max_i ‖[T_i, Σ T_j*T_j]‖ small.
PredicateResult spherically_quasinormal_commutant(const OperatorTuple& t, std::optional<double> tol = {});

/// Route B: ‖ℙ𝕍 − 𝕍ℙ‖ from the block embedding. Throws NotCommuting when the
/// tuple does not commute.
PredicateResult spherically_quasinormal_block(const OperatorTuple& t, std::optional<double> tol = {});

/// Both routes; `block` is empty for non-commuting tuples.
struct SphericalQuasinormality {
  PredicateResult commutant;
  std::optional<PredicateResult> block;
  bool holds() const { return commutant.holds; }
};

SphericalQuasinormality is_spherically_quasinormal(const OperatorTuple& t, std::optional<double> tol = {});

/// Residual max_k ‖(T∘T)_k‖.
PredicateResult is_square_zero(const OperatorTuple& t, std::optional<double> tol = {});

/// Smallest eigenvalue of P above rank_tol. This is only a necessary
/// condition for Taylor invertibility; residual is λ_min(P), tolerance is
/// rank_tol and `holds` means λ_min(P) > rank_tol.
PredicateResult taylor_invertibility_proxy(const OperatorTuple& t);

struct Classification {
  double tolerance = 0.0;
  PredicateResult commuting;
  PredicateResult normal;
  std::vector<PredicateResult> coordinate_normal;
  std::vector<PredicateResult> coordinate_quasinormal;
  std::vector<PredicateResult> coordinate_hyponormal;
  PredicateResult jointly_hyponormal;
  SphericalQuasinormality spherically_quasinormal;
  PredicateResult square_zero;
  PredicateResult taylor_proxy;
};

Classification classify(const OperatorTuple& t, std::optional<double> tol = {});

}  // namespace sphertrans
