#include <doctest.h>

#include "oracles.hpp"
#include "sphertrans/norms.hpp"
#include "sphertrans/transforms.hpp"

using namespace sphertrans;
using namespace testing;

namespace {
constexpr double kExampleP[] = {1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
}

TEST_CASE("spherical and Euclidean norms of the worked examples") {
  CHECK(spherical_norm(rank_one_example()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(spherical_norm(diagonal_example()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(spherical_norm(OperatorTuple::zero(2, 3)) == 0.0);
  CHECK(euclidean_norm(rank_one_example()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(euclidean_norm(diagonal_example()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  auto r = rng(51);
  const OperatorTuple single = random_tuple(1, 4, r, Ensemble::Ginibre);
  CHECK(euclidean_norm(single) == doctest::Approx(operator_norm(single[0])).epsilon(1e-14));
}

TEST_CASE("Euclidean norm dominates the spherical norm") {
  // The reverse comparison fails already for the diagonal example.
  CHECK(euclidean_norm(diagonal_example()) > spherical_norm(diagonal_example()) + 0.4);
  auto r = rng(52);
  for (int k = 0; k < 50; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 4, 2 + k % 5, r, static_cast<Ensemble>(k % 3));
    const double n = spherical_norm(t), e = euclidean_norm(t);
    CHECK(n <= e * (1 + 1e-12));
    CHECK(e <= std::sqrt(static_cast<double>(t.size())) * n * (1 + 1e-12));
  }
}

TEST_CASE("hypo-norm") {
  auto r = rng(53);
  const OperatorTuple single = random_tuple(1, 3, r, Ensemble::Ginibre);
  CHECK(hypo_norm(single).value == doctest::Approx(operator_norm(single[0])).epsilon(1e-14));
  CHECK(hypo_norm(diagonal_example()).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hypo_norm(rank_one_example()).value == doctest::Approx(1.0).epsilon(1e-9));
  for (int k = 0; k < 10; ++k) {
    const OperatorTuple t = random_tuple(3, 3, r, Ensemble::Ginibre);
    CHECK(std::abs(hypo_norm(t).value - hypo_norm(adjoint_tuple(t)).value) <= 2e-6);
  }
}

TEST_CASE("single-operator numerical radius") {
  CHECK(numerical_radius_single(mat2(1, 0, 0, Complex(0, 1))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(numerical_radius_single(mat2(0, 1, 0, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(numerical_radius_single(ComplexMatrix::Zero(3, 3)) == 0.0);
  auto r = rng(54);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = ginibre_matrix(4, 4, r);
    CHECK(numerical_radius_single(a) == doctest::Approx(numerical_radius_oracle(a)).epsilon(1e-10));
    const ComplexMatrix h = a + a.adjoint();
    CHECK(numerical_radius_single(h) == doctest::Approx(operator_norm(h)).epsilon(1e-10));
  }
}

TEST_CASE("joint numerical radius: both routes and the brute-force oracle") {
  auto r = rng(55);
  CHECK(joint_numerical_radius(tuple_of({mat2(0, 1, 0, 0)})).value == doctest::Approx(0.5).epsilon(1e-9));
  for (int k = 0; k < 8; ++k) {
    const OperatorTuple t = random_tuple(2, 2, r, Ensemble::Ginibre);
    const JointNumericalRadius w = joint_numerical_radius(t);
    CHECK(w.discrepancy <= 1e-6);
    const double oracle = joint_numerical_radius_oracle(t);
    CHECK(std::abs(w.value - oracle) <= 1e-6);
  }
}

TEST_CASE("joint numerical radius sandwich") {
  auto r = rng(56);
  for (int k = 0; k < 20; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 4, 2 + k % 4, r, static_cast<Ensemble>(k % 3));
    const double w = joint_numerical_radius(t).value;
    const double n = spherical_norm(t);
    const double d = static_cast<double>(t.size());
    CHECK(n / (2 * std::sqrt(d)) <= w + 1e-6);
    CHECK(w <= n + 1e-6);
    CHECK(w <= euclidean_norm(t) + 1e-6);
  }
}

TEST_CASE("Schatten spherical norm") {
  for (double p : kExampleP) {
    CHECK(schatten_spherical_norm(rank_one_example(), p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(schatten_spherical_norm(diagonal_example(), p) == doctest::Approx(std::pow(2.0, 1.0 / p)).epsilon(1e-14));
  }
  auto r = rng(57);
  const OperatorTuple single = random_tuple(1, 4, r, Ensemble::Ginibre);
  for (double p : kExampleP) {
    CHECK(schatten_spherical_norm(single, p) == doctest::Approx(schatten_oracle(single[0], p)).epsilon(1e-12));
  }
  for (int k = 0; k < 20; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 4, 2 + k % 4, r, Ensemble::Ginibre);
    const SphericalPolar pol = spherical_polar(t);
    for (double p : {1.0, 2.0, 3.5}) {
      const double v = schatten_spherical_norm(t, p);
      CHECK(std::abs(v - schatten_oracle(block_embedding(t).t_block, p)) <= 1e-9 * (1 + v));
      CHECK(std::abs(v - schatten_oracle(pol.p, p)) <= 1e-9 * (1 + v));
    }
  }
  CHECK_THROWS_AS(schatten_spherical_norm(rank_one_example(), 0.9), Error);
}

TEST_CASE("Schatten hypo-norm of the worked examples") {
  for (double p : kExampleP) {
    CHECK(std::abs(schatten_hypo_norm(rank_one_example(), p).value - 1.0) <= 1e-8);
    // sup (|λ₁|^p + |λ₂|^p)^{1/p} over the unit sphere is max(1, 2^{1/p − 1/2}).
    const double closed = std::max(1.0, std::pow(2.0, 1.0 / p - 0.5));
    CHECK(std::abs(schatten_hypo_norm(diagonal_example(), p).value - closed) <= 1e-8);
  }
  auto r = rng(58);
  const OperatorTuple single = random_tuple(1, 3, r, Ensemble::Ginibre);
  CHECK(schatten_hypo_norm(single, 3.0).value == doctest::Approx(schatten_norm(single[0], 3.0)).epsilon(1e-14));
}

TEST_CASE("Schatten hypo-2-norm: optimizer, Gram closed form and grid oracle") {
  auto r = rng(59);
  for (int k = 0; k < 20; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 4, 2 + k % 4, r, Ensemble::Ginibre);
    CHECK(std::abs(schatten_hypo_norm(t, 2.0).value - schatten_hypo_norm_gram(t)) <= 1e-6);
  }
  for (int k = 0; k < 5; ++k) {
    const OperatorTuple t = random_tuple(2, 3, r, Ensemble::Ginibre);
    const double oracle = sup_over_c2(t, [](const ComplexMatrix& m) { return schatten_oracle(m, 3.0); });
    CHECK(std::abs(schatten_hypo_norm(t, 3.0).value - oracle) <= 1e-6);
  }
}

TEST_CASE("Schatten p-numerical radius") {
  auto r = rng(60);
  const ComplexMatrix g = ginibre_matrix(3, 3, r);
  const ComplexMatrix h = g + g.adjoint();
  for (double p : {1.0, 2.0, 4.0}) {
    CHECK(schatten_p_numerical_radius(tuple_of({h}), p).value ==
          doctest::Approx(schatten_norm(h, p)).epsilon(1e-10));
  }
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = ginibre_matrix(4, 4, r);
    CHECK(schatten_numerical_radius_single(a, 2.0).value == doctest::Approx(omega2_closed_form(a)).epsilon(1e-10));
    CHECK(schatten_p_numerical_radius(tuple_of({a}), 2.0).value ==
          doctest::Approx(omega2_closed_form(a)).epsilon(1e-10));
  }
  for (int k = 0; k < 10; ++k) {
    const OperatorTuple t = random_tuple(1 + k % 3, 3, r, static_cast<Ensemble>(k % 3));
    for (double p : {1.0, 1.5, 3.0}) {
      const double w = schatten_p_numerical_radius(t, p).value;
      const double hp = schatten_hypo_norm(t, p).value;
      CHECK(w <= hp + 1e-6);
      CHECK(hp <= schatten_spherical_norm(t, p) + 1e-6);
      CHECK(0.5 * hp <= w + 1e-6);
    }
  }
  for (int k = 0; k < 4; ++k) {
    const OperatorTuple t = random_tuple(2, 2, r, Ensemble::Ginibre);
    const double oracle = sup_over_c2(t, omega2_closed_form);
    CHECK(std::abs(schatten_p_numerical_radius(t, 2.0).value - oracle) <= 1e-6);
  }
}

TEST_CASE("zero tuple gives zero everywhere") {
  const OperatorTuple z = OperatorTuple::zero(2, 3);
  CHECK(hypo_norm(z).value == 0.0);
  CHECK(joint_numerical_radius(z).value == 0.0);
  for (double p : {1.0, 2.0}) {
    CHECK(schatten_spherical_norm(z, p) == 0.0);
    CHECK(schatten_hypo_norm(z, p).value == 0.0);
    CHECK(schatten_p_numerical_radius(z, p).value == 0.0);
  }
}
