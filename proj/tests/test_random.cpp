#include <doctest.h>

#include "sphertrans/error.hpp"
#include "sphertrans/norms.hpp"
#include "sphertrans/predicates.hpp"
#include "support.hpp"

using namespace sphertrans;
using namespace testing;

TEST_CASE("generators are deterministic") {
  for (Ensemble e : {Ensemble::Ginibre, Ensemble::Nilpotent, Ensemble::Contraction}) {
    CHECK(dist(random_tuple(3, 4, 17, e), random_tuple(3, 4, 17, e)) == 0.0);
    CHECK(dist(random_tuple(3, 4, 17, e), random_tuple(3, 4, 18, e)) > 0.0);
  }
  CHECK(dist(random_commuting_tuple(2, 5, 3), random_commuting_tuple(2, 5, 3)) == 0.0);
  CHECK(dist(random_normal_tuple(2, 5, 3), random_normal_tuple(2, 5, 3)) == 0.0);
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  CHECK(mix_seed(1, 2) != mix_seed(2, 2));
}

TEST_CASE("scalar tuples") {
  const OperatorTuple t = random_tuple(1, 1, 5, Ensemble::Ginibre);
  CHECK(t.size() == 1);
  CHECK(t.dim() == 1);
  CHECK(std::isfinite(std::abs(t[0](0, 0))));
  CHECK(random_tuple(1, 1, 5, Ensemble::Nilpotent)[0](0, 0) == Complex(0, 0));
}

TEST_CASE("ensemble structure") {
  auto r = rng(81);
  for (int k = 0; k < 30; ++k) {
    const std::size_t d = 1 + k % 4;
    const Index n = 1 + k % 6;
    const OperatorTuple nil = random_tuple(d, n, r, Ensemble::Nilpotent);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) CHECK((nil[i] * nil[j]).norm() <= 1e-12);
    CHECK(std::abs(spherical_norm(random_tuple(d, n, r, Ensemble::Contraction)) - 1.0) <= 1e-12);
    CHECK(is_commuting(random_commuting_tuple(d, n, r), 1e-10).holds);
    CHECK(is_normal_tuple(random_normal_tuple(d, n, r)).holds);
    CHECK(taylor_invertibility_proxy(random_normal_tuple(d, n, r, true)).holds);
  }
}

TEST_CASE("random unitary and PSD samples") {
  auto r = rng(82);
  for (Index n = 1; n <= 6; ++n) {
    const ComplexMatrix u = random_unitary(n, r);
    CHECK(dist(u.adjoint() * u, ComplexMatrix::Identity(n, n)) <= 1e-12);
    const ComplexMatrix p = random_psd(n, r);
    CHECK(dist(p, p.adjoint()) <= 1e-14);
    CHECK(hermitian_eigenvalues(p).minCoeff() >= -1e-12);
    CHECK(hermitian_eigenvalues(random_psd(n, r, true)).minCoeff() > 0.0);
  }
}

TEST_CASE("ensemble names") {
  for (Ensemble e : {Ensemble::Ginibre, Ensemble::Nilpotent, Ensemble::Contraction})
    CHECK(parse_ensemble(to_string(e)) == e);
  CHECK_THROWS_AS(parse_ensemble("gaussian"), Error);
}
