#include <doctest.h>

#include "sphertrans/norms.hpp"
#include "sphertrans/tuple.hpp"
#include "support.hpp"

using namespace sphertrans;
using namespace testing;

TEST_CASE("OperatorTuple validation") {
  CHECK_THROWS_AS(OperatorTuple(std::vector<ComplexMatrix>{}), Error);
  CHECK_THROWS_AS(tuple_of({mat2(1, 0, 0, 1), ComplexMatrix::Identity(3, 3)}), Error);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(1, 1) = Complex(std::numeric_limits<double>::infinity(), 0);
  CHECK_THROWS_AS(tuple_of({bad}), Error);
  const OperatorTuple z = OperatorTuple::zero(3, 4);
  CHECK(z.size() == 3);
  CHECK(z.dim() == 4);
}

TEST_CASE("defect operator of the worked examples") {
  CHECK(dist(defect_operator(diagonal_example()), ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(dist(defect_operator(rank_one_example()), mat2(std::sqrt(2.0), 0, 0, 0)) < 1e-15);
  CHECK(dist(defect_operator(OperatorTuple::zero(2, 3)), ComplexMatrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("spherical polar decomposition of the worked examples") {
  const SphericalPolar sharp = spherical_polar(rank_one_example());
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(dist(sharp.v[0], mat2(h, 0, 0, 0)) < 1e-15);
  CHECK(dist(sharp.v[1], mat2(0, 0, h, 0)) < 1e-15);
  CHECK(dist(sharp.initial_projection(), mat2(1, 0, 0, 0)) < 1e-15);
  CHECK(dist(sharp.pseudo_inverse(), mat2(h, 0, 0, 0)) < 1e-15);
  CHECK(sharp.rank == 1);

  const SphericalPolar diag = spherical_polar(diagonal_example());
  CHECK(dist(diag.v[0], mat2(1, 0, 0, 0)) < 1e-15);
  CHECK(dist(diag.v[1], mat2(0, 0, 0, 1)) < 1e-15);
  CHECK(dist(diag.initial_projection(), ComplexMatrix::Identity(2, 2)) < 1e-15);

  const SphericalPolar zero = spherical_polar(OperatorTuple::zero(2, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.p.norm() == 0.0);
  CHECK(zero.v[0].norm() == 0.0);
  CHECK(zero.v[1].norm() == 0.0);
}

TEST_CASE("polar invariants on random tuples") {
  auto r = rng(21);
  for (int k = 0; k < 60; ++k) {
    const auto d = static_cast<std::size_t>(1 + k % 4);
    const Index n = 2 + k % 5;
    const auto ens = static_cast<Ensemble>(k % 3);
    const OperatorTuple t = random_tuple(d, n, r, ens);
    const SphericalPolar pol = spherical_polar(t);
    const double scale = 1.0 + spherical_norm(t);
    for (std::size_t i = 0; i < d; ++i) CHECK(spectral_norm_oracle(pol.v[i] * pol.p - t[i]) <= 1e-9 * scale);
    CHECK(spectral_norm_oracle(pol.initial_projection() - pol.range_projection()) <= 1e-9);
    // P² = ΣT*T always; the square root against an independent oracle when P is definite.
    CHECK(spectral_norm_oracle(pol.p * pol.p - gram_sum(t)) <= 1e-9 * scale * scale);
    if (ens == Ensemble::Ginibre) {
      CHECK(spectral_norm_oracle(pol.p - sqrt_oracle(gram_sum(t))) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("block embedding") {
  auto r = rng(22);
  const OperatorTuple single = random_tuple(1, 3, r, Ensemble::Ginibre);
  CHECK(dist(block_embedding(single).t_block, single[0]) == 0.0);

  const BlockEmbedding sharp = block_embedding(rank_one_example());
  for (double p : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    CHECK(schatten_norm(sharp.t_block, p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }

  const OperatorTuple t = random_tuple(3, 4, r, Ensemble::Ginibre);
  const BlockEmbedding e = block_embedding(t);
  CHECK(e.t_block.rows() == 12);
  CHECK(e.t_block.block(4, 0, 4, 4) == t[1]);
  CHECK(e.t_block.block(0, 4, 12, 8).norm() == 0.0);
  const SphericalPolar pol = spherical_polar(t);
  for (Index i = 0; i < 3; ++i) CHECK(e.p_block.block(4 * i, 4 * i, 4, 4) == pol.p);
  CHECK(spectral_norm_oracle(e.t_block) ==
        doctest::Approx(std::sqrt(spectral_norm_oracle(gram_sum(t)))).epsilon(1e-10));
  CHECK(dist(e.v_block * e.p_block, e.t_block) <= 1e-9);
}

TEST_CASE("tuple product, power and adjoint") {
  auto r = rng(23);
  const OperatorTuple t = random_tuple(1, 3, r, Ensemble::Ginibre);
  const OperatorTuple id = tuple_of({ComplexMatrix::Identity(3, 3)});
  CHECK(dist(tuple_product(t, id), t) == 0.0);

  const OperatorTuple sq = tuple_power(rank_one_example(), 2);
  REQUIRE(sq.size() == 4);
  CHECK(dist(sq[0], mat2(1, 0, 0, 0)) == 0.0);
  CHECK(dist(sq[1], mat2(0, 0, 0, 0)) == 0.0);
  CHECK(dist(sq[2], mat2(0, 0, 1, 0)) == 0.0);
  CHECK(dist(sq[3], mat2(0, 0, 0, 0)) == 0.0);
  CHECK(tuple_power(rank_one_example(), 3).size() == 8);
  CHECK_THROWS_AS(tuple_power(t, 0), Error);

  const OperatorTuple u = random_tuple(3, 4, r, Ensemble::Ginibre);
  CHECK(dist(adjoint_tuple(adjoint_tuple(u)), u) == 0.0);
}

TEST_CASE("combination helpers") {
  const OperatorTuple t = diagonal_example();
  const std::vector<Complex> lam = {Complex(0.6, 0), Complex(0, 0.8)};
  CHECK(dist(combination(t, lam), mat2(0.6, 0, 0, Complex(0, 0.8))) == 0.0);
  CHECK(dist(stacked_column(t).block(2, 0, 2, 2), t[1]) == 0.0);
  CHECK(dist(affine_combination(2.0, t, -1.0, t), t) == 0.0);
}
