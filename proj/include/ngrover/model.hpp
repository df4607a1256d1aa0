#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ngrover {

/// Raised when a search-space or noise parameter is outside its domain.
class ParameterError : public std::invalid_argument {
 public:
  enum class Kind {
    NotPowerOfTwo,
    NoMarkedItems,
    TooManyMarked,
    NoiseOutOfRange,
    IndexOutOfRange,
    DuplicateIndex,
    MarkedCountMismatch,
    TooLargeForDense,
  };

  ParameterError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Database of N items with M of them marked, and the Grover angle θ defined
/// by sin²(θ/2) = M/N. All trigonometric fields are fixed at construction.
class SearchSpace {
 public:
  std::uint64_t n_items() const noexcept { return n_items_; }
  std::uint64_t marked_count() const noexcept { return marked_count_; }
  double theta() const noexcept { return theta_; }
  double cos_theta() const noexcept { return cos_theta_; }
  double sin_theta() const noexcept { return sin_theta_; }
  double cos_2theta() const noexcept { return cos_2theta_; }
  double sin_2theta() const noexcept { return sin_2theta_; }

  /// Fraction of marked items, M/N.
  double marked_fraction() const noexcept {
    return static_cast<double>(marked_count_) / static_cast<double>(n_items_);
  }

  friend SearchSpace derive_search_space(std::uint64_t n_items, std::uint64_t marked_count);

 private:
  SearchSpace() = default;

  std::uint64_t n_items_ = 0;
  std::uint64_t marked_count_ = 0;
  double theta_ = 0.0;
  double cos_theta_ = 0.0;
  double sin_theta_ = 0.0;
  double cos_2theta_ = 0.0;
  double sin_2theta_ = 0.0;
};

/// Validates (N, M) and derives θ. N must be a power of two with N ≥ 2 and
/// 1 ≤ M ≤ N/2; each violation throws ParameterError with its own Kind.
SearchSpace derive_search_space(std::uint64_t n_items, std::uint64_t marked_count);

/// Phase-damping strength η together with the equivalent phase-flip
/// probability α, related by 2α = 1 + √η.
class NoiseLevel {
 public:
  static NoiseLevel from_eta(double eta);
  static NoiseLevel from_alpha(double alpha);

  double eta() const noexcept { return eta_; }
  double alpha() const noexcept { return alpha_; }
  double sqrt_eta() const noexcept { return sqrt_eta_; }
  bool noiseless() const noexcept { return eta_ == 1.0; }

 private:
  NoiseLevel(double eta, double alpha);

  double eta_;
  double alpha_;
  double sqrt_eta_;
};

enum class NoiseDirection { AlphaToEta, EtaToAlpha };

NoiseLevel convert_noise(double value, NoiseDirection direction);

/// Lower end of the oscillatory window η ∈ (η_min, 1]. Only defined when
/// cos2θ > 0; otherwise `supported` is false and `value` is 0.
struct EtaMin {
  double value = 0.0;
  bool supported = false;
};

EtaMin eta_min(const SearchSpace& space);

enum class SpectralCase {
  Oscillatory,  // η > A₊², complex-conjugate eigenvalues
  Overdamped,   // η < A₊², two distinct real eigenvalues
  Degenerate,   // |η − A₊²| within tolerance, not diagonalizable in closed form
};

const char* to_string(SpectralCase kind) noexcept;

inline constexpr double kDegenerateTolerance = 1e-12;

/// Eigen-structure of the Bloch iteration matrix for one (N, M, η).
struct SpectralData {
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b = 0.0;
  SpectralCase kind = SpectralCase::Degenerate;
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  // Oscillatory: φ with λ± = √η e^{±iφ}, in (0, π).
  double angle = 0.0;
  // Overdamped: φ ≥ 0 with |λ±| = √η e^{±φ}.
  double rapidity = 0.0;
  // Sign of A₊; the overdamped eigenvalues are both negative when it is -1.
  int sign = 1;
};

SpectralData spectral_data(const SearchSpace& space, const NoiseLevel& noise,
                           double degenerate_tol = kDegenerateTolerance);

}  // namespace ngrover
