#include "sphertrans/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sphertrans {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotPsd: return "NotPSD";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

bool all_finite(const ComplexMatrix& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

void require_square_finite(const ComplexMatrix& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw Error(ErrorCode::NonSquare, std::string(what) + " is empty");
  }
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NonSquare, std::string(what) + " is " + std::to_string(a.rows()) +
                                          "x" + std::to_string(a.cols()));
  }
  if (!all_finite(a)) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
}

namespace {

ComplexMatrix checked_symmetrize(const ComplexMatrix& a) {
  require_square_finite(a, "Hermitian input");
  const ComplexMatrix skew = a - a.adjoint();
  const double scale = operator_norm(a);
  const double asym = operator_norm(skew);
  if (asym > kHermitianTol * scale) {
    throw Error(ErrorCode::NonHermitian,
                "asymmetry " + std::to_string(asym) + " exceeds 1e-12 * " + std::to_string(scale));
  }
  return (a + a.adjoint()) * 0.5;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  const ComplexMatrix h = checked_symmetrize(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  const ComplexMatrix h = checked_symmetrize(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

ComplexMatrix spectral_apply(const ComplexMatrix& basis, const RealVector& values) {
  return basis * values.cast<Complex>().asDiagonal() * basis.adjoint();
}

ComplexMatrix psd_power(const ComplexMatrix& p, double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw Error(ErrorCode::InvalidParameter, "psd_power exponent must be finite and >= 0");
  }
  HermitianEig eig = hermitian_eig(p);
  const Index n = p.rows();
  if (t == 0.0) return ComplexMatrix::Identity(n, n);

  const double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double clip = kPsdClipTol * scale;
  RealVector powered(n);
  for (Index k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues(k);
    if (lambda < -clip) {
      throw Error(ErrorCode::NotPsd, "eigenvalue " + std::to_string(lambda) + " below -1e-12*||P||");
    }
    lambda = std::max(lambda, 0.0);
    powered(k) = lambda == 0.0 ? 0.0 : std::pow(lambda, t);
  }
  return spectral_apply(eig.eigenvectors, powered);
}

Svd svd(const ComplexMatrix& a) {
  if (!all_finite(a)) throw Error(ErrorCode::NonFinite, "SVD input has NaN/Inf entries");
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& a) {
  if (!all_finite(a)) throw Error(ErrorCode::NonFinite, "SVD input has NaN/Inf entries");
  Eigen::JacobiSVD<ComplexMatrix> solver(a);
  return solver.singularValues();
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

void require_schatten_p(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw Error(ErrorCode::InvalidP, "Schatten exponent p must satisfy 1 <= p < inf, got " +
                                         std::to_string(p));
  }
}

double schatten_from_singular_values(const RealVector& s, double p) {
  require_schatten_p(p);
  if (s.size() == 0) return 0.0;
  // Scale by the largest value so large p does not overflow.
  const double top = s.maxCoeff();
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (Index k = 0; k < s.size(); ++k) acc += std::pow(s(k) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

double schatten_norm(const ComplexMatrix& a, double p) {
  require_schatten_p(p);
  return schatten_from_singular_values(singular_values(a), p);
}

Complex trace(const ComplexMatrix& a) {
  require_square_finite(a, "trace argument");
  return a.trace();
}

ComplexMatrix real_part(const ComplexMatrix& a) {
  ComplexMatrix h = (a + a.adjoint()) * 0.5;
  // Force exact Hermitian symmetry, including a real diagonal.
  for (Index j = 0; j < h.cols(); ++j) {
    h(j, j) = Complex(h(j, j).real(), 0.0);
    for (Index i = j + 1; i < h.rows(); ++i) h(j, i) = std::conj(h(i, j));
  }
  return h;
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  Index rows = 0;
  Index cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  Index r = 0;
  Index c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace sphertrans
