#include "ngrover/model.hpp"

#include <bit>
#include <cmath>

namespace ngrover {

SearchSpace derive_search_space(std::uint64_t n_items, std::uint64_t marked_count) {
  if (n_items < 2 || !std::has_single_bit(n_items)) {
    throw ParameterError(ParameterError::Kind::NotPowerOfTwo,
                         "database size N=" + std::to_string(n_items) +
                             " must be a power of two with N >= 2");
  }
  if (marked_count == 0) {
    throw ParameterError(ParameterError::Kind::NoMarkedItems,
                         "marked count M must be at least 1");
  }
  if (2 * marked_count > n_items) {
    throw ParameterError(ParameterError::Kind::TooManyMarked,
                         "marked count M=" + std::to_string(marked_count) +
                             " exceeds N/2=" + std::to_string(n_items / 2));
  }

  SearchSpace s;
  s.n_items_ = n_items;
  s.marked_count_ = marked_count;
  const double p = s.marked_fraction();
  // Both expressions are exact in binary for power-of-two N.
  s.cos_theta_ = 1.0 - 2.0 * p;
  s.cos_2theta_ = 1.0 - 8.0 * p + 8.0 * p * p;
  s.sin_theta_ = 2.0 * std::sqrt(p * (1.0 - p));
  s.sin_2theta_ = 2.0 * s.sin_theta_ * s.cos_theta_;
  s.theta_ = 2.0 * std::asin(std::sqrt(p));
  return s;
}

NoiseLevel::NoiseLevel(double eta, double alpha)
    : eta_(eta), alpha_(alpha), sqrt_eta_(std::sqrt(eta)) {}

NoiseLevel NoiseLevel::from_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ParameterError(ParameterError::Kind::NoiseOutOfRange,
                         "damping strength eta=" + std::to_string(eta) +
                             " must lie in (0, 1]");
  }
  return NoiseLevel(eta, 0.5 * (1.0 + std::sqrt(eta)));
}

NoiseLevel NoiseLevel::from_alpha(double alpha) {
  if (!(alpha > 0.5 && alpha <= 1.0)) {
    throw ParameterError(ParameterError::Kind::NoiseOutOfRange,
                         "phase-flip probability alpha=" + std::to_string(alpha) +
                             " must lie in (1/2, 1]");
  }
  const double root = 2.0 * alpha - 1.0;
  return NoiseLevel(root * root, alpha);
}

NoiseLevel convert_noise(double value, NoiseDirection direction) {
  return direction == NoiseDirection::EtaToAlpha ? NoiseLevel::from_eta(value)
                                                 : NoiseLevel::from_alpha(value);
}

EtaMin eta_min(const SearchSpace& space) {
  const double c2 = space.cos_2theta();
  if (c2 <= 0.0) return {};
  const double root = (1.0 - space.sin_2theta()) / c2;
  return {root * root, true};
}

const char* to_string(SpectralCase kind) noexcept {
  switch (kind) {
    case SpectralCase::Oscillatory: return "oscillatory";
    case SpectralCase::Overdamped: return "overdamped";
    case SpectralCase::Degenerate: return "degenerate";
  }
  return "unknown";
}

SpectralData spectral_data(const SearchSpace& space, const NoiseLevel& noise,
                           double degenerate_tol) {
  const double eta = noise.eta();
  const double c2 = space.cos_2theta();

  SpectralData d;
  d.a_plus = 0.5 * (1.0 + eta) * c2;
  d.a_minus = 0.5 * (1.0 - eta) * c2;
  d.sign = d.a_plus < 0.0 ? -1 : 1;

  const double gap = eta - d.a_plus * d.a_plus;
  d.b = std::sqrt(std::abs(gap));

  if (std::abs(gap) <= degenerate_tol) {
    d.kind = SpectralCase::Degenerate;
    d.lambda_plus = d.lambda_minus = d.a_plus;
  } else if (gap > 0.0) {
    d.kind = SpectralCase::Oscillatory;
    d.lambda_plus = {d.a_plus, d.b};
    d.lambda_minus = {d.a_plus, -d.b};
    d.angle = std::atan2(d.b, d.a_plus);
  } else {
    d.kind = SpectralCase::Overdamped;
    d.lambda_plus = d.a_plus + d.b;
    d.lambda_minus = d.a_plus - d.b;
    d.rapidity = std::atanh(d.b / std::abs(d.a_plus));
  }
  return d;
}

}  // namespace ngrover
