#pragma once

#include <cstddef>
#include <stdexcept>

#include "ngrover/channels.hpp"
#include "ngrover/model.hpp"

namespace ngrover {

/// Thrown for parameters on the degenerate spectral boundary η = A₊², where the
/// iteration matrix has a repeated eigenvalue and no closed form is provided.
/// Callers fall back to the step-by-step recursion.
class NotRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed-form powers of the iteration matrix obtained from its
/// diagonalization M = X D X⁻¹.
///
/// Both spectral cases share one shape,
///
///   Mᵗ = c(t)·I + s(t)·[[−A₋, sin2θ], [−η sin2θ, A₋]]
///
/// with c(t) = η^{t/2} cos φt, s(t) = η^{t/2} sin φt / B when the eigenvalues
/// are complex, and c(t) = σᵗ η^{t/2} cosh φt, s(t) = σ^{t+1} η^{t/2} sinh φt / B
/// when they are real (σ = sign A₊).
class ClosedFormSolution {
 public:
  /// Throws NotRepresentable when the spectrum is degenerate.
  ClosedFormSolution(const SearchSpace& space, const NoiseLevel& noise,
                     double degenerate_tol = kDegenerateTolerance);

  const SpectralData& spectral() const noexcept { return spectral_; }
  const SearchSpace& space() const noexcept { return space_; }
  const NoiseLevel& noise() const noexcept { return noise_; }

  /// Largest modulus among the eigenvalues excited by the initial state; the
  /// Bloch vector shrinks like rateᵗ.
  double decay_rate() const noexcept;

 private:
  SpectralData spectral_;
  SearchSpace space_;
  NoiseLevel noise_;
};

/// True when a closed form exists for these parameters.
bool is_representable(const SearchSpace& space, const NoiseLevel& noise,
                      double degenerate_tol = kDegenerateTolerance);

IterationMatrix matrix_power(const ClosedFormSolution& sol, std::size_t t);

/// Bloch vector after t iterations from (sin θ, cos θ).
BlochVec2 bloch_closed(const ClosedFormSolution& sol, std::size_t t);

double success_probability_closed(const ClosedFormSolution& sol, std::size_t t);

/// Constant C of the oscillatory envelope |P_suc(t) − 1/2| ≤ C·η^{t/2}.
/// Throws std::domain_error outside the oscillatory case.
double oscillatory_envelope_constant(const ClosedFormSolution& sol);

}  // namespace ngrover
