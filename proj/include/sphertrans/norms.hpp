#pragma once
//
// Scalar functionals of operator tuples.
//
// Exact quantities (‖T‖, ‖T‖_e, ‖T‖_{s,p}) come straight from singular
// values. Suprema over the coefficient ball (‖T‖_h, ω(T), ‖T‖_{s,h,p},
// ω_{s,p}(T)) are SupremumEstimate values from sphere_optimize and are
// therefore lower bounds.
//

#include "sphertrans/optimize.hpp"
#include "sphertrans/tuple.hpp"

namespace sphertrans {

/// ‖T‖ = ‖Σ T_k*T_k‖^{1/2}.
double spherical_norm(const OperatorTuple& t);

/// ‖T‖_e = (Σ ‖T_k‖²)^{1/2}.
double euclidean_norm(const OperatorTuple& t);

/// ‖T‖_{s,p} = [tr(P^p)]^{1/p}.
double schatten_spherical_norm(const OperatorTuple& t, double p);

/// ‖T‖_h = sup over the unit ball of ‖Σ λ_k T_k‖.
SupremumEstimate hypo_norm(const OperatorTuple& t, const OptimizerConfig& config = {});

/// ω(A) = max_θ λ_max(Re(e^{iθ}A)); 720-point θ grid plus golden-section
/// refinement to 1e-10.
double numerical_radius_single(const ComplexMatrix& a);

/// ω_p(A) = sup_θ ‖Re(e^{iθ}A)‖_p; 360-point θ grid plus refinement.
PhaseMaximum schatten_numerical_radius_single(const ComplexMatrix& a, double p);

/// Both estimators of the joint numerical radius.
///   vector_route:      sup over unit x of (Σ |⟨T_k x, x⟩|²)^{1/2}
///   combination_route: sup over λ of ω(Σ λ_k T_k)
/// The two agree for every tuple; `discrepancy` records |a − b|.
struct JointNumericalRadius {
  double value = 0.0;  // max of the two routes
  SupremumEstimate vector_route;
  SupremumEstimate combination_route;
  double discrepancy = 0.0;
};

JointNumericalRadius joint_numerical_radius(const OperatorTuple& t, const OptimizerConfig& config = {});

/// ‖T‖_{s,h,p} = sup over the unit ball of ‖Σ λ_k T_k‖_p.
SupremumEstimate schatten_hypo_norm(const OperatorTuple& t, double p, const OptimizerConfig& config = {});

/// Closed form of ‖T‖_{s,h,2}: √λ_max(G) with G_{jk} = tr(T_k T_j*).
double schatten_hypo_norm_gram(const OperatorTuple& t);

/// ω_{s,p}(T) = sup over λ and θ of ‖Re(e^{iθ} Σ λ_k T_k)‖_p.
SupremumEstimate schatten_p_numerical_radius(const OperatorTuple& t, double p, const OptimizerConfig& config = {});

namespace detail {
// Hot-loop evaluators used inside optimizer objectives.
double fast_operator_norm(const ComplexMatrix& a);
double hermitian_top_eigenvalue(const ComplexMatrix& h);
double hermitian_schatten_norm(const ComplexMatrix& h, double p);
double fast_schatten_norm(const ComplexMatrix& a, double p);
}  // namespace detail

}  // namespace sphertrans
