#pragma once
//
// Spherical transforms of an operator tuple T = V·P. Each transform has an
// overload taking a precomputed polar decomposition; the plain overloads
// recompute it.
//

#include "sphertrans/tuple.hpp"

namespace sphertrans {

/// T^D = (P·V₁, …, P·V_d).
OperatorTuple duggal(const OperatorTuple& t);
OperatorTuple duggal(const SphericalPolar& polar);

/// T̃(t) = (PᵗV₁P^{1−t}, …); t ∈ [0,1] with P⁰ = I, so T̃(0) = T and T̃(1) = T^D.
OperatorTuple generalized_aluthge(const OperatorTuple& t, double param);
OperatorTuple generalized_aluthge(const SphericalPolar& polar, double param);

/// T̃ = T̃(1/2).
OperatorTuple aluthge(const OperatorTuple& t);
OperatorTuple aluthge(const SphericalPolar& polar);

/// T̂(t) = ½(T̃(t) + T̃(1−t)).
OperatorTuple heinz(const OperatorTuple& t, double param);
OperatorTuple heinz(const SphericalPolar& polar, double param);

/// T̂ = ½(T + T^D).
OperatorTuple mean(const OperatorTuple& t);
OperatorTuple mean(const OperatorTuple& t, const SphericalPolar& polar);

/// M_λ(T) = λT + (1−λ)T^D.
OperatorTuple lambda_mean(const OperatorTuple& t, double lambda);
OperatorTuple lambda_mean(const OperatorTuple& t, const SphericalPolar& polar, double lambda);

/// Throws InvalidParameter unless value ∈ [0,1].
void require_unit_interval(double value, const char* name);

}  // namespace sphertrans
