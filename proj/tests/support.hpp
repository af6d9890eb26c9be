#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "sphertrans/random.hpp"
#include "sphertrans/tuple.hpp"

namespace testing {

using sphertrans::Complex;
using sphertrans::ComplexMatrix;
using sphertrans::OperatorTuple;

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline OperatorTuple tuple_of(std::initializer_list<ComplexMatrix> ms) {
  return OperatorTuple(std::vector<ComplexMatrix>(ms));
}

// (E₁₁, E₂₁)
inline OperatorTuple rank_one_example() { return tuple_of({mat2(1, 0, 0, 0), mat2(0, 0, 1, 0)}); }

// (E₁₁, E₂₂)
inline OperatorTuple diagonal_example() { return tuple_of({mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)}); }

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

inline double dist(const OperatorTuple& a, const OperatorTuple& b) { return sphertrans::max_coordinate_distance(a, b); }

// Eigenvalue-based spectral norm, independent of the SVD path.
inline double spectral_norm_oracle(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.adjoint() * a);
  return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

// Σ σ_j^p from eigenvalues of A*A.
inline double schatten_oracle(const ComplexMatrix& a, double p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.adjoint() * a);
  double acc = 0.0;
  for (double e : es.eigenvalues()) acc += std::pow(std::sqrt(std::max(e, 0.0)), p);
  return std::pow(acc, 1.0 / p);
}

// Denman–Beavers iteration for the square root of a positive definite matrix.
inline ComplexMatrix sqrt_oracle(const ComplexMatrix& a) {
  ComplexMatrix y = a, z = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < 60; ++i) {
    const ComplexMatrix yi = y.inverse(), zi = z.inverse();
    y = 0.5 * (y + zi);
    z = 0.5 * (z + yi);
  }
  return y;
}

inline sphertrans::Rng rng(std::uint64_t seed) { return sphertrans::Rng(seed); }

inline double uniform_real_sample(sphertrans::Rng& r) { return std::uniform_real_distribution<double>(0.0, 1.0)(r); }

}  // namespace testing
