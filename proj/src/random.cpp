#include "sphertrans/random.hpp"

#include <cmath>
#include <string>

#include "sphertrans/norms.hpp"

namespace sphertrans {

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::Nilpotent: return "nilpotent";
    case Ensemble::Contraction: return "contraction";
  }
  return "unknown";
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::Ginibre;
  if (name == "nilpotent") return Ensemble::Nilpotent;
  if (name == "contraction") return Ensemble::Contraction;
  throw Error(ErrorCode::InvalidParameter, "unknown ensemble '" + std::string(name) + "'");
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian(rng);
  }
  return m;
}

ComplexMatrix random_unitary(Index n, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_psd(Index n, Rng& rng, bool full_rank) {
  std::uniform_int_distribution<Index> rank_dist(1, n);
  const Index r = full_rank ? n : rank_dist(rng);
  const ComplexMatrix g = ginibre_matrix(n, r, rng);
  ComplexMatrix a = g * g.adjoint() / static_cast<double>(n);
  return real_part(a);
}

OperatorTuple random_tuple(std::size_t d, Index n, Rng& rng, Ensemble ensemble) {
  std::vector<ComplexMatrix> coords;
  coords.reserve(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  switch (ensemble) {
    case Ensemble::Ginibre:
    case Ensemble::Contraction:
      for (std::size_t k = 0; k < d; ++k) coords.push_back(ginibre_matrix(n, n, rng) * scale);
      break;
    case Ensemble::Nilpotent: {
      const Index top = n / 2;
      const Index right = n - top;
      const ComplexMatrix u = random_unitary(n, rng);
      for (std::size_t k = 0; k < d; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        if (top > 0) m.block(0, top, top, right) = ginibre_matrix(top, right, rng) * scale;
        coords.push_back(u * m * u.adjoint());
      }
      break;
    }
  }
  OperatorTuple t(std::move(coords));
  if (ensemble == Ensemble::Contraction) {
    const double nrm = spherical_norm(t);
    if (nrm > 0.0) t = affine_combination(1.0 / nrm, t, 0.0, t);
  }
  return t;
}

OperatorTuple random_tuple(std::size_t d, Index n, std::uint64_t seed, Ensemble ensemble) {
  Rng rng(seed);
  return random_tuple(d, n, rng, ensemble);
}

OperatorTuple random_commuting_tuple(std::size_t d, Index n, Rng& rng) {
  const ComplexMatrix a = ginibre_matrix(n, n, rng) / std::sqrt(static_cast<double>(n));
  std::vector<ComplexMatrix> powers{ComplexMatrix::Identity(n, n)};
  for (Index j = 1; j < n; ++j) powers.push_back(powers.back() * a);
  std::vector<ComplexMatrix> coords;
  coords.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (const auto& pw : powers) m += complex_gaussian(rng) * pw;
    const double nrm = operator_norm(m);
    coords.push_back(nrm > 0.0 ? ComplexMatrix(m / nrm) : m);
  }
  return OperatorTuple(std::move(coords));
}

OperatorTuple random_commuting_tuple(std::size_t d, Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_commuting_tuple(d, n, rng);
}

OperatorTuple random_normal_tuple(std::size_t d, Index n, Rng& rng, bool invertible_defect) {
  const ComplexMatrix u = random_unitary(n, rng);
  std::vector<ComplexMatrix> coords;
  coords.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Eigen::VectorXcd diag(n);
    for (Index i = 0; i < n; ++i) {
      Complex z = complex_gaussian(rng);
      if (invertible_defect && k == 0) z = std::polar(0.5 + std::abs(z), std::arg(z));
      diag(i) = z;
    }
    coords.push_back(u * diag.asDiagonal() * u.adjoint());
  }
  return OperatorTuple(std::move(coords));
}

OperatorTuple random_normal_tuple(std::size_t d, Index n, std::uint64_t seed, bool invertible_defect) {
  Rng rng(seed);
  return random_normal_tuple(d, n, rng, invertible_defect);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sphertrans
