#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "ngrover/channels.hpp"
#include "ngrover/fullstate.hpp"
#include "ngrover/model.hpp"

namespace ngrover {

// All entropies are in nats.

/// Eigenvalues below this are treated as zero when testing supports.
inline constexpr double kRankTolerance = 1e-10;

/// −Σ p ln p with 0 ln 0 = 0. Throws std::invalid_argument unless the entries
/// are non-negative and sum to 1 within 1e−10.
double von_neumann_entropy(std::span<const double> spectrum);

/// Non-zero eigenvalues ((1 + |r|)/2, (1 − |r|)/2) of the register state; |r|
/// is clamped to 1.
std::pair<double, double> state_spectrum(const BlochVec2& v) noexcept;

/// D(ρ‖σ) = tr ρ ln ρ − tr ρ ln σ, or +∞ when supp ρ ⊄ supp σ.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// von Neumann entropy of a full density matrix via its eigenvalues.
double von_neumann_entropy(const DensityMatrix& rho);

/// Diagonal part of ρ in the computational basis.
DensityMatrix dephased(const DensityMatrix& rho);

struct CoherenceValues {
  double s1 = 0.0;       // S(ρ)
  double s1_diag = 0.0;  // S(ρ_diag)
  double c1 = 0.0;       // S(ρ_diag) − S(ρ)
};

/// Relative entropy of coherence of the N-dimensional register state with
/// effective Bloch vector v. ρ_diag holds P/M on the marked items and
/// (1 − P)/(N − M) on the rest.
CoherenceValues coherence_rel_entropy(const BlochVec2& v, const SearchSpace& space);

/// The same quantities computed from the full density matrix by
/// diagonalization.
CoherenceValues coherence_full(const DensityMatrix& rho);

struct TradeoffBounds {
  double lower = 0.0;  // binary entropy h(P)
  double upper = 0.0;  // P ln(M/P) + (1 − P) ln((N − M)/(1 − P))
};

TradeoffBounds tradeoff_bounds(double p_suc, const SearchSpace& space);

struct CoherenceRecord {
  std::size_t t = 0;
  double p_suc = 0.0;
  double s1 = 0.0;
  double s1_diag = 0.0;
  double c1 = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

CoherenceRecord coherence_record(std::size_t t, const BlochVec2& v, const SearchSpace& space);

/// ½ ln(MN − M²), the large-t value of C₁ under noise.
double asymptotic_coherence(const SearchSpace& space) noexcept;

}  // namespace ngrover
