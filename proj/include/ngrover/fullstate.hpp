#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "ngrover/channels.hpp"
#include "ngrover/model.hpp"

namespace ngrover {

/// Indices of the M marked items among {0, …, N−1}.
class MarkedSet {
 public:
  /// Throws ParameterError unless the indices are distinct, all < N, and
  /// their count equals space.marked_count().
  MarkedSet(const SearchSpace& space, std::vector<std::uint64_t> indices);

  /// M indices spread evenly over the database.
  static MarkedSet evenly_spaced(const SearchSpace& space);

  const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }
  bool contains(std::uint64_t x) const { return mask_.at(x); }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t dimension() const noexcept { return mask_.size(); }

 private:
  std::vector<std::uint64_t> indices_;
  std::vector<bool> mask_;
};

/// Upper bound on N for dense simulation (a 4096² complex matrix is 256 MiB).
inline constexpr std::uint64_t kMaxDenseItems = 4096;

/// N×N density matrix of the register.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd rho);

  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
  Eigen::Index dimension() const noexcept { return rho_.rows(); }
  std::complex<double> trace() const { return rho_.trace(); }
  double purity() const;

 private:
  Eigen::MatrixXcd rho_;
};

struct ValidationReport {
  double hermiticity_error = 0.0;  // max |ρ − ρ†|
  double trace_error = 0.0;        // |tr ρ − 1|
  double min_eigenvalue = 0.0;     // only filled when PSD checking is requested
  bool psd_checked = false;
};

/// Hermiticity and trace checks; the O(N³) eigenvalue check only when
/// `check_psd` is set.
ValidationReport validate(const DensityMatrix& rho, bool check_psd = false);

DensityMatrix init_uniform(const SearchSpace& space);

/// Diagonal of the oracle J: −1 on marked indices, +1 elsewhere.
Eigen::VectorXd build_oracle_operator(const SearchSpace& space, const MarkedSet& marked);

/// Dense K = 2|s⟩⟨s| − I with |s⟩ the uniform superposition.
Eigen::MatrixXd build_diffusion_operator(const SearchSpace& space);

/// The two diagonal Kraus operators E₀ = Π_u + √η Π_m and E₁ = √(1−η) Π_m.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> collective_kraus_operators(
    const MarkedSet& marked, const NoiseLevel& noise);

/// ρ ↦ E₀ρE₀† + E₁ρE₁†: entries coupling marked and unmarked indices are
/// scaled by √η, everything else is left alone.
DensityMatrix apply_collective_dephasing(const DensityMatrix& rho, const MarkedSet& marked,
                                         const NoiseLevel& noise);

/// J ρ J for the diagonal oracle.
DensityMatrix apply_oracle(const DensityMatrix& rho, const MarkedSet& marked);

/// K ρ K applied as a rank-one correction, O(N²).
DensityMatrix apply_diffusion(const DensityMatrix& rho);

/// One iteration Υ_K ∘ Φ ∘ Υ_J ∘ Φ.
DensityMatrix noisy_grover_step(const DensityMatrix& rho, const SearchSpace& space,
                                const MarkedSet& marked, const NoiseLevel& noise);

/// Σ_{x marked} ρ_xx.
double success_probability_full(const DensityMatrix& rho, const MarkedSet& marked);

/// Raised when ρ carries weight outside span{|w⟩, |m⟩}.
class SubspaceLeakage : public std::runtime_error {
 public:
  SubspaceLeakage(const std::string& what, double leakage)
      : std::runtime_error(what), leakage_(leakage) {}
  double leakage() const noexcept { return leakage_; }

 private:
  double leakage_;
};

struct EffectiveProjection {
  BlochVec2 bloch;
  // 1 − ⟨w|ρ|w⟩ − ⟨m|ρ|m⟩
  double leakage = 0.0;
};

/// Overlaps of ρ with the unmarked/marked superpositions, without checks.
EffectiveProjection project_effective(const DensityMatrix& rho, const MarkedSet& marked);

inline constexpr double kLeakageTolerance = 1e-10;

/// r_x = 2 Re⟨w|ρ|m⟩, r_z = ⟨w|ρ|w⟩ − ⟨m|ρ|m⟩. Throws SubspaceLeakage when
/// the leakage exceeds `tolerance`.
BlochVec2 effective_bloch(const DensityMatrix& rho, const SearchSpace& space,
                          const MarkedSet& marked, double tolerance = kLeakageTolerance);

/// ρ(0), ρ(1), …, ρ(steps) from the uniform superposition.
std::vector<DensityMatrix> fullstate_trajectory(const SearchSpace& space,
                                                const MarkedSet& marked,
                                                const NoiseLevel& noise, std::size_t steps);

}  // namespace ngrover
