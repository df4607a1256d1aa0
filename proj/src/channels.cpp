#include "ngrover/channels.hpp"

#include <algorithm>
#include <cmath>

namespace ngrover {

double BlochVec2::norm() const noexcept { return std::hypot(r_x, r_z); }

BlochVec2 initial_bloch(const SearchSpace& space) noexcept {
  return {space.sin_theta(), space.cos_theta()};
}

BlochVec2 IterationMatrix::apply(const BlochVec2& v) const noexcept {
  return {xx * v.r_x + xz * v.r_z, zx * v.r_x + zz * v.r_z};
}

IterationMatrix IterationMatrix::operator*(const IterationMatrix& rhs) const noexcept {
  return {xx * rhs.xx + xz * rhs.zx, xx * rhs.xz + xz * rhs.zz,
          zx * rhs.xx + zz * rhs.zx, zx * rhs.xz + zz * rhs.zz};
}

BlochVec2 phase_damping_map(const BlochVec2& v, const NoiseLevel& noise) noexcept {
  return {noise.sqrt_eta() * v.r_x, v.r_z};
}

BlochVec2 oracle_map(const BlochVec2& v) noexcept { return {-v.r_x, v.r_z}; }

BlochVec2 diffusion_map(const BlochVec2& v, const SearchSpace& space) noexcept {
  const double c = space.cos_2theta();
  const double s = space.sin_2theta();
  return {-c * v.r_x + s * v.r_z, s * v.r_x + c * v.r_z};
}

IterationMatrix iteration_matrix(const SearchSpace& space, const NoiseLevel& noise) noexcept {
  const double eta = noise.eta();
  const double c = space.cos_2theta();
  const double s = space.sin_2theta();
  return {eta * c, s, -eta * s, c};
}

BlochVec2 step(const BlochVec2& v, const IterationMatrix& m) noexcept { return m.apply(v); }

std::vector<TrajectoryRecord> trajectory(const SearchSpace& space, const NoiseLevel& noise,
                                         std::size_t steps) {
  const IterationMatrix m = iteration_matrix(space, noise);
  std::vector<TrajectoryRecord> out;
  out.reserve(steps + 1);
  BlochVec2 r = initial_bloch(space);
  for (std::size_t t = 0; t <= steps; ++t) {
    if (t > 0) r = step(r, m);
    out.push_back({t, r, r.success_probability(), r.norm()});
  }
  return out;
}

std::pair<double, double> singular_values(const IterationMatrix& m) noexcept {
  // MᵀM = [[p, q], [q, r]]; its eigenvalues are the squared singular values.
  const double p = m.xx * m.xx + m.zx * m.zx;
  const double q = m.xx * m.xz + m.zx * m.zz;
  const double r = m.xz * m.xz + m.zz * m.zz;
  const double mean = 0.5 * (p + r);
  const double radius = std::hypot(0.5 * (p - r), q);
  const double big = mean + radius;
  // Product of the squared singular values is det² which avoids cancellation.
  const double det = m.determinant();
  const double small = big > 0.0 ? det * det / big : 0.0;
  return {std::sqrt(big), std::sqrt(std::max(small, 0.0))};
}

}  // namespace ngrover
