#pragma once
//
// Deterministic random ensembles for the verification harness. All
// generators draw from std::mt19937_64; a fixed seed reproduces the same
// tuple bit for bit on the same platform.
//

#include <cstdint>
#include <random>
#include <string_view>

#include "sphertrans/tuple.hpp"

namespace sphertrans {

using Rng = std::mt19937_64;

enum class Ensemble { Ginibre, Nilpotent, Contraction };

std::string_view to_string(Ensemble e);
/// Throws InvalidParameter for unknown names.
Ensemble parse_ensemble(std::string_view name);

/// Standard complex Gaussian: E|z|² = 1.
Complex complex_gaussian(Rng& rng);

/// n×m i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng);

/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases removed.
ComplexMatrix random_unitary(Index n, Rng& rng);

/// G·G*/n with G an n×r Ginibre block and r ∈ [1, n] (so singular PSD
/// matrices occur).
ComplexMatrix random_psd(Index n, Rng& rng, bool full_rank = false);

/// ginibre:     entries ~ CN(0,1)/√n
/// nilpotent:   U·N_k·U* with one Haar U and N_k supported on the top-right
///              ⌊n/2⌋×⌈n/2⌉ block, so every product T_iT_j vanishes
/// contraction: ginibre rescaled to spherical norm 1
OperatorTuple random_tuple(std::size_t d, Index n, Rng& rng, Ensemble ensemble);
OperatorTuple random_tuple(std::size_t d, Index n, std::uint64_t seed, Ensemble ensemble);

/// Coordinates are random polynomials (degree ≤ n−1) in one Ginibre matrix,
/// each scaled to operator norm 1.
OperatorTuple random_commuting_tuple(std::size_t d, Index n, Rng& rng);
OperatorTuple random_commuting_tuple(std::size_t d, Index n, std::uint64_t seed);

/// T_k = U·D_k·U* with one Haar U and complex Gaussian diagonals D_k. With
/// `invertible_defect` every diagonal entry of D_1 is bounded away from
/// zero, so P is invertible.
OperatorTuple random_normal_tuple(std::size_t d, Index n, Rng& rng, bool invertible_defect = false);
OperatorTuple random_normal_tuple(std::size_t d, Index n, std::uint64_t seed, bool invertible_defect = false);

/// splitmix64 mixing, used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sphertrans
