#pragma once
//
// Dense complex kernel: Hermitian eigendecomposition, SVD, PSD fractional
// powers and the norms used throughout the library. Every norm is taken from
// the singular values of an explicit SVD.
//

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sphertrans/error.hpp"

namespace sphertrans {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Spectral data of a Hermitian matrix; eigenvalues ascending, eigenvectors
/// stored as the columns of a unitary matrix.
struct HermitianEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

struct Svd {
  ComplexMatrix u;
  RealVector singular_values;  // descending
  ComplexMatrix v;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdClipTol = 1e-12;

bool all_finite(const ComplexMatrix& a);

/// Throws NonFinite / NonSquare as appropriate.
void require_square_finite(const ComplexMatrix& a, const char* what);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (A + A*)/2 after checking ‖A − A*‖ ≤ 1e-12·‖A‖.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only, ascending. Same preconditions as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

/// P^t for PSD P and t ≥ 0. Eigenvalues in [−1e-12·‖P‖, 0) are clipped to 0,
/// 0^t = 0 for t > 0 and P^0 is the identity.
ComplexMatrix psd_power(const ComplexMatrix& p, double t);

/// Q·diag(f(λ))·Q* for an already decomposed Hermitian matrix.
ComplexMatrix spectral_apply(const ComplexMatrix& basis, const RealVector& values);

Svd svd(const ComplexMatrix& a);
RealVector singular_values(const ComplexMatrix& a);

double operator_norm(const ComplexMatrix& a);

/// (Σ s_j^p)^{1/p}; requires p ≥ 1.
double schatten_norm(const ComplexMatrix& a, double p);
double schatten_from_singular_values(const RealVector& s, double p);

/// Throws InvalidP unless p is finite and ≥ 1.
void require_schatten_p(double p);

Complex trace(const ComplexMatrix& a);

/// (A + A*)/2, Hermitian by construction.
ComplexMatrix real_part(const ComplexMatrix& a);

/// Block-diagonal matrix A₁ ⊕ ⋯ ⊕ A_k.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace sphertrans
