#pragma once
//
// Multistart maximization over the unit sphere of C^d. Every supremum over the
// closed coefficient ball in this library goes through sphere_optimize: the
// objectives are absolutely homogeneous, so the supremum is attained on the
// sphere. Values returned are lower bounds of the true supremum.
//

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sphertrans/linalg.hpp"

namespace sphertrans {

/// A coefficient vector λ with Σ|λ_k|² ≤ 1.
struct BallPoint {
  std::vector<Complex> lambda;

  double norm_squared() const;
};

struct SupremumEstimate {
  double value = 0.0;
  BallPoint argmax;
  double theta = 0.0;  // maximizing phase for θ-type objectives, else 0
  int starts = 0;
  bool converged = true;
  double spread = 0.0;  // max − min over the local maxima found
  long evaluations = 0;
};

struct OptimizerConfig {
  int random_starts = 32;
  bool axis_starts = true;
  double step_tol = 1e-9;
  double coarse_tol = 1e-4;
  int refine_top = 4;
  long max_evals_per_run = 20000;
  /// Random sphere samples screened before the local searches; the best
  /// refine_top of them join the start set.
  long screening_samples = 0;
  std::uint64_t seed = 42;

  /// 8× the starts plus a 10⁵-point screening pass.
  OptimizerConfig escalated() const;
};

/// Whether the objective is invariant under λ → e^{iφ}λ. When it is, the
/// phase is fixed by making λ₁ real (first nonzero coordinate in the
/// reported argmax).
enum class PhaseGauge { Fixed, Free };

using SphereObjective = std::function<double(std::span<const Complex>)>;

SupremumEstimate sphere_optimize(const SphereObjective& objective, std::size_t d,
                                 const OptimizerConfig& config = {},
                                 PhaseGauge gauge = PhaseGauge::Fixed);

/// Rotates λ so its first coordinate with modulus above 1e-12 is real and
/// nonnegative.
std::vector<Complex> canonical_phase(std::span<const Complex> lambda);

/// Maximizes a 2π-periodic function: uniform grid then golden-section search
/// around the best grid point down to theta_tol.
struct PhaseMaximum {
  double theta = 0.0;
  double value = 0.0;
};

PhaseMaximum maximize_over_phase(const std::function<double(double)>& f, int grid_points,
                                 double theta_tol = 1e-10);

}  // namespace sphertrans
