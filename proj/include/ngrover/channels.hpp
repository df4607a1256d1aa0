#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ngrover/model.hpp"

namespace ngrover {

/// Effective qubit Bloch vector in the {|w⟩, |m⟩} basis. The y component is
/// identically zero along the noisy Grover dynamics and is not stored.
struct BlochVec2 {
  double r_x = 0.0;
  double r_z = 0.0;

  double norm() const noexcept;
  /// P_suc = (1 − r_z) / 2.
  double success_probability() const noexcept { return 0.5 * (1.0 - r_z); }
};

/// Initial Bloch vector of the uniform superposition, (sin θ, cos θ).
BlochVec2 initial_bloch(const SearchSpace& space) noexcept;

/// Real 2×2 matrix acting on (r_x, r_z) columns, row-major.
struct IterationMatrix {
  double xx = 1.0, xz = 0.0;
  double zx = 0.0, zz = 1.0;

  double determinant() const noexcept { return xx * zz - xz * zx; }
  BlochVec2 apply(const BlochVec2& v) const noexcept;
  IterationMatrix operator*(const IterationMatrix& rhs) const noexcept;
  static IterationMatrix identity() noexcept { return {}; }
};

struct TrajectoryRecord {
  std::size_t t = 0;
  BlochVec2 bloch;
  double p_suc = 0.0;
  double bloch_norm = 0.0;
};

/// Dephasing across the marked/unmarked split: r_x → √η r_x, r_z fixed.
BlochVec2 phase_damping_map(const BlochVec2& v, const NoiseLevel& noise) noexcept;

/// Oracle sign flip J: r_x → −r_x.
BlochVec2 oracle_map(const BlochVec2& v) noexcept;

/// Inversion about the mean K; an orthogonal reflection of the (r_x, r_z) plane.
BlochVec2 diffusion_map(const BlochVec2& v, const SearchSpace& space) noexcept;

/// One noisy Grover iteration K ∘ Φ ∘ J ∘ Φ as a single matrix:
/// [[η cos2θ, sin2θ], [−η sin2θ, cos2θ]].
IterationMatrix iteration_matrix(const SearchSpace& space, const NoiseLevel& noise) noexcept;

BlochVec2 step(const BlochVec2& v, const IterationMatrix& m) noexcept;

/// Records for t = 0..steps, starting from the uniform superposition.
std::vector<TrajectoryRecord> trajectory(const SearchSpace& space, const NoiseLevel& noise,
                                         std::size_t steps);

/// Singular values (largest, smallest) via the eigenvalues of MᵀM.
std::pair<double, double> singular_values(const IterationMatrix& m) noexcept;

}  // namespace ngrover
