#include <doctest.h>

#include "sphertrans/error.hpp"
#include "sphertrans/linalg.hpp"
#include "sphertrans/predicates.hpp"
#include "support.hpp"

using namespace sphertrans;
using namespace testing;

namespace {

// (i, j) block is T_j* T_i − T_i T_j*, assembled entry by entry.
ComplexMatrix joint_commutator_oracle(const OperatorTuple& t) {
  const Index n = t.dim();
  const Index d = static_cast<Index>(t.size());
  ComplexMatrix m = ComplexMatrix::Zero(n * d, n * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const ComplexMatrix& ti = t[static_cast<std::size_t>(i)];
      const ComplexMatrix tj = t[static_cast<std::size_t>(j)].adjoint();
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          Complex s = 0;
          for (Index c = 0; c < n; ++c) s += tj(a, c) * ti(c, b) - ti(a, c) * tj(c, b);
          m(i * n + a, j * n + b) = s;
        }
    }
  return m;
}

ComplexMatrix random_hermitian(Index n, Rng& r) {
  const ComplexMatrix g = ginibre_matrix(n, n, r);
  return g + g.adjoint();
}

}  // namespace

TEST_CASE("single-operator predicates on 2×2 examples") {
  const ComplexMatrix lower = mat2(0, 0, 1, 0);
  const ComplexMatrix upper = mat2(0, 1, 0, 0);
  CHECK_FALSE(is_hyponormal_single(lower).holds);
  CHECK(is_hyponormal_single(lower).residual == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(is_hyponormal_single(upper).holds);
  CHECK(is_hyponormal_single(upper).residual == doctest::Approx(1.0).epsilon(1e-14));
  // AA*A − A*A² = E₂₁ for A = E₂₁.
  CHECK_FALSE(is_quasinormal_single(lower).holds);
  CHECK(is_quasinormal_single(lower).residual == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(is_normal_single(lower).holds);
}

TEST_CASE("Hermitian matrices are normal, quasinormal and hyponormal") {
  auto r = rng(71);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix h = random_hermitian(2 + k % 5, r);
    CHECK(is_normal_single(h).holds);
    CHECK(is_quasinormal_single(h).holds);
    CHECK(is_hyponormal_single(h).holds);
  }
}

TEST_CASE("commuting and normal tuples") {
  CHECK(is_commuting(diagonal_example()).holds);
  CHECK(is_commuting(diagonal_example()).residual == 0.0);
  CHECK_FALSE(is_commuting(rank_one_example()).holds);
  CHECK(is_commuting(rank_one_example()).residual == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(is_normal_tuple(diagonal_example()).holds);
  CHECK_FALSE(is_normal_tuple(rank_one_example()).holds);
}

TEST_CASE("joint hyponormality") {
  const OperatorTuple ex = rank_one_example();
  const ComplexMatrix m = joint_commutator_oracle(ex);
  CHECK(dist(joint_commutator_matrix(ex), m) == 0.0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  const double lmin = es.eigenvalues().minCoeff();
  CHECK(lmin == doctest::Approx(-(1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  const PredicateResult jh = is_jointly_hyponormal(ex);
  CHECK_FALSE(jh.holds);
  CHECK(jh.residual == doctest::Approx(-lmin).epsilon(1e-12));

  CHECK(is_jointly_hyponormal(OperatorTuple::zero(3, 2)).holds);
  CHECK(is_jointly_hyponormal(diagonal_example()).holds);

  auto r = rng(72);
  for (int k = 0; k < 10; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 3, 2 + k % 3, r, Ensemble::Ginibre);
    CHECK(dist(joint_commutator_matrix(t), joint_commutator_oracle(t)) <= 1e-12);
  }
}

TEST_CASE("spherical quasinormality") {
  const SphericalQuasinormality ex = is_spherically_quasinormal(rank_one_example());
  CHECK_FALSE(ex.holds());
  CHECK(ex.commutant.residual == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(ex.block.has_value());
  CHECK_THROWS_AS(spherically_quasinormal_block(rank_one_example()), Error);
  try {
    spherically_quasinormal_block(rank_one_example());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommuting);
  }

  const SphericalQuasinormality z = is_spherically_quasinormal(OperatorTuple::zero(2, 3));
  CHECK(z.holds());
  REQUIRE(z.block.has_value());
  CHECK(z.block->holds);

  const SphericalQuasinormality dg = is_spherically_quasinormal(diagonal_example());
  CHECK(dg.holds());
  REQUIRE(dg.block.has_value());
  CHECK(dg.block->holds);
}

TEST_CASE("implication chain and route agreement on random samples") {
  auto r = rng(73);
  for (int k = 0; k < 30; ++k) {
    const OperatorTuple t = random_normal_tuple(1 + k % 4, 2 + k % 5, r, k % 2 == 0);
    const Classification c = classify(t);
    CHECK(c.normal.holds);
    CHECK(c.spherically_quasinormal.holds());
    REQUIRE(c.spherically_quasinormal.block.has_value());
    CHECK(c.spherically_quasinormal.block->holds);
    CHECK(c.jointly_hyponormal.holds);
  }
  for (int k = 0; k < 30; ++k) {
    const OperatorTuple t = random_commuting_tuple(1 + k % 4, 2 + k % 5, r);
    const SphericalQuasinormality q = is_spherically_quasinormal(t);
    REQUIRE(q.block.has_value());
    CHECK(q.commutant.holds == q.block->holds);
    if (q.holds()) CHECK(is_jointly_hyponormal(t).holds);
  }
}

TEST_CASE("a hyponormal matrix is normal") {
  auto r = rng(74);
  int hyponormal = 0;
  for (int k = 0; k < 200; ++k) {
    const Index n = 2 + k % 5;
    const ComplexMatrix a = k % 2 == 0 ? ginibre_matrix(n, n, r) : random_normal_tuple(1, n, r)[0];
    if (is_hyponormal_single(a).holds) {
      ++hyponormal;
      CHECK(is_normal_single(a).holds);
    }
  }
  CHECK(hyponormal >= 100);
}

TEST_CASE("square-zero") {
  CHECK(is_square_zero(tuple_of({mat2(0, 1, 0, 0), mat2(0, 2, 0, 0)})).holds);
  CHECK(is_square_zero(OperatorTuple::zero(2, 2)).holds);
  const PredicateResult d = is_square_zero(diagonal_example());
  CHECK_FALSE(d.holds);
  CHECK(d.residual == doctest::Approx(1.0).epsilon(1e-14));
  auto r = rng(75);
  for (int k = 0; k < 20; ++k)
    CHECK(is_square_zero(random_tuple(1 + k % 4, 2 + k % 5, r, Ensemble::Nilpotent)).holds);
}

TEST_CASE("Taylor invertibility proxy") {
  CHECK(taylor_invertibility_proxy(diagonal_example()).holds);
  CHECK(taylor_invertibility_proxy(diagonal_example()).residual == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(taylor_invertibility_proxy(rank_one_example()).holds);
  CHECK_FALSE(taylor_invertibility_proxy(OperatorTuple::zero(2, 2)).holds);
}

TEST_CASE("tolerance and classification") {
  const OperatorTuple t = rank_one_example();
  CHECK(default_predicate_tolerance(t) == doctest::Approx(1e-9 * 3.0));
  const Classification c = classify(t);
  CHECK(c.tolerance == default_predicate_tolerance(t));
  CHECK(c.coordinate_normal.size() == 2);
  CHECK(c.coordinate_normal[0].holds);
  CHECK_FALSE(c.coordinate_normal[1].holds);
  CHECK_FALSE(c.commuting.holds);
  CHECK_FALSE(c.taylor_proxy.holds);
  const Classification loose = classify(t, 10.0);
  CHECK(loose.commuting.holds);
  CHECK(loose.jointly_hyponormal.holds);
}
