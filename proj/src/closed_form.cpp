#include "ngrover/closed_form.hpp"

#include <cmath>

namespace ngrover {

namespace {

// Coefficients of I and of the traceless part in Mᵗ.
struct PowerCoefficients {
  double identity;
  double traceless;
};

PowerCoefficients power_coefficients(const SpectralData& d, double eta, std::size_t t) {
  if (t == 0) return {1.0, 0.0};
  const double tt = static_cast<double>(t);
  const double log_scale = 0.5 * tt * std::log(eta);

  if (d.kind == SpectralCase::Oscillatory) {
    const double scale = std::exp(log_scale);
    const double phase = d.angle * tt;
    return {scale * std::cos(phase), scale * std::sin(phase) / d.b};
  }

  // Overdamped. η^{t/2} cosh φt and η^{t/2} sinh φt are bounded by |λ|maxᵗ < 1,
  // but cosh/sinh alone overflow for large φt.
  const double x = d.rapidity * tt;
  double ch = 0.0;
  double sh = 0.0;
  if (x < 20.0) {
    const double scale = std::exp(log_scale);
    ch = scale * std::cosh(x);
    sh = scale * std::sinh(x);
  } else {
    const double up = std::exp(log_scale + x);
    const double down = std::exp(log_scale - x);
    ch = 0.5 * (up + down);
    sh = 0.5 * (up - down);
  }
  const double sign_t = (d.sign < 0 && (t % 2 == 1)) ? -1.0 : 1.0;
  return {sign_t * ch, sign_t * d.sign * sh / d.b};
}

}  // namespace

ClosedFormSolution::ClosedFormSolution(const SearchSpace& space, const NoiseLevel& noise,
                                       double degenerate_tol)
    : spectral_(spectral_data(space, noise, degenerate_tol)), space_(space), noise_(noise) {
  if (spectral_.kind == SpectralCase::Degenerate) {
    throw NotRepresentable("iteration matrix has a repeated eigenvalue (eta = A+^2); "
                           "use the recursion engine");
  }
}

double ClosedFormSolution::decay_rate() const noexcept {
  if (spectral_.kind == SpectralCase::Oscillatory) return noise_.sqrt_eta();
  // With sin2θ = 0 the matrix is diag(−η, −1) and the initial vector (1, 0)
  // lies on the −η eigenvector.
  if (space_.sin_2theta() == 0.0) return noise_.eta();
  return noise_.sqrt_eta() * std::exp(spectral_.rapidity);
}

bool is_representable(const SearchSpace& space, const NoiseLevel& noise,
                      double degenerate_tol) {
  return spectral_data(space, noise, degenerate_tol).kind != SpectralCase::Degenerate;
}

IterationMatrix matrix_power(const ClosedFormSolution& sol, std::size_t t) {
  const SpectralData& d = sol.spectral();
  const double eta = sol.noise().eta();
  const double s2 = sol.space().sin_2theta();
  const auto [c, s] = power_coefficients(d, eta, t);
  return {c - s * d.a_minus, s * s2, -s * eta * s2, c + s * d.a_minus};
}

BlochVec2 bloch_closed(const ClosedFormSolution& sol, std::size_t t) {
  return matrix_power(sol, t).apply(initial_bloch(sol.space()));
}

double success_probability_closed(const ClosedFormSolution& sol, std::size_t t) {
  return bloch_closed(sol, t).success_probability();
}

double oscillatory_envelope_constant(const ClosedFormSolution& sol) {
  const SpectralData& d = sol.spectral();
  if (d.kind != SpectralCase::Oscillatory) {
    throw std::domain_error("envelope constant is defined for the oscillatory case only");
  }
  const SearchSpace& sp = sol.space();
  const double eta = sol.noise().eta();
  return (eta * std::abs(sp.sin_2theta()) * sp.sin_theta() +
          (d.b + std::abs(d.a_minus)) * sp.cos_theta()) /
         (2.0 * d.b);
}

}  // namespace ngrover
