#include "ngrover/fullstate.hpp"

#include <algorithm>
#include <cmath>

namespace ngrover {

MarkedSet::MarkedSet(const SearchSpace& space, std::vector<std::uint64_t> indices)
    : indices_(std::move(indices)), mask_(space.n_items(), false) {
  if (space.n_items() > kMaxDenseItems) {
    throw ParameterError(ParameterError::Kind::TooLargeForDense,
                         "dense simulation supports N <= " + std::to_string(kMaxDenseItems));
  }
  std::sort(indices_.begin(), indices_.end());
  if (indices_.empty()) {
    throw ParameterError(ParameterError::Kind::NoMarkedItems, "marked set is empty");
  }
  if (indices_.size() != space.marked_count()) {
    throw ParameterError(ParameterError::Kind::MarkedCountMismatch,
                         "marked set has " + std::to_string(indices_.size()) +
                             " indices, expected M=" + std::to_string(space.marked_count()));
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const auto x = indices_[i];
    if (x >= space.n_items()) {
      throw ParameterError(ParameterError::Kind::IndexOutOfRange,
                           "marked index " + std::to_string(x) + " is out of range");
    }
    if (i > 0 && indices_[i - 1] == x) {
      throw ParameterError(ParameterError::Kind::DuplicateIndex,
                           "marked index " + std::to_string(x) + " is repeated");
    }
    mask_[x] = true;
  }
}

MarkedSet MarkedSet::evenly_spaced(const SearchSpace& space) {
  const std::uint64_t stride = space.n_items() / space.marked_count();
  std::vector<std::uint64_t> idx;
  idx.reserve(space.marked_count());
  for (std::uint64_t k = 0; k < space.marked_count(); ++k) idx.push_back(k * stride + stride / 2);
  return MarkedSet(space, std::move(idx));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw std::invalid_argument("density matrix must be square");
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

ValidationReport validate(const DensityMatrix& rho, bool check_psd) {
  const auto& m = rho.matrix();
  ValidationReport rep;
  rep.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_error = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = solver.eigenvalues().minCoeff();
    rep.psd_checked = true;
  }
  return rep;
}

DensityMatrix init_uniform(const SearchSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.n_items());
  return DensityMatrix(Eigen::MatrixXcd::Constant(n, n, 1.0 / static_cast<double>(n)));
}

Eigen::VectorXd build_oracle_operator(const SearchSpace& space, const MarkedSet& marked) {
  Eigen::VectorXd diag = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(space.n_items()));
  for (auto x : marked.indices()) diag(static_cast<Eigen::Index>(x)) = -1.0;
  return diag;
}

Eigen::MatrixXd build_diffusion_operator(const SearchSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.n_items());
  const double w = 2.0 / static_cast<double>(n);
  Eigen::MatrixXd k = Eigen::MatrixXd::Constant(n, n, w);
  k.diagonal().array() -= 1.0;
  return k;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> collective_kraus_operators(
    const MarkedSet& marked, const NoiseLevel& noise) {
  const auto n = static_cast<Eigen::Index>(marked.dimension());
  Eigen::VectorXd e0 = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n);
  const double leak = std::sqrt(1.0 - noise.eta());
  for (auto x : marked.indices()) {
    e0(static_cast<Eigen::Index>(x)) = noise.sqrt_eta();
    e1(static_cast<Eigen::Index>(x)) = leak;
  }
  return {e0.asDiagonal(), e1.asDiagonal()};
}

DensityMatrix apply_collective_dephasing(const DensityMatrix& rho, const MarkedSet& marked,
                                         const NoiseLevel& noise) {
  if (noise.noiseless()) return rho;
  Eigen::MatrixXcd out = rho.matrix();
  const Eigen::Index n = out.rows();
  const double s = noise.sqrt_eta();
  for (Eigen::Index j = 0; j < n; ++j) {
    const bool mj = marked.contains(static_cast<std::uint64_t>(j));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (marked.contains(static_cast<std::uint64_t>(i)) != mj) out(i, j) *= s;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_oracle(const DensityMatrix& rho, const MarkedSet& marked) {
  Eigen::MatrixXcd out = rho.matrix();
  for (auto x : marked.indices()) {
    const auto k = static_cast<Eigen::Index>(x);
    out.row(k) *= -1.0;
    out.col(k) *= -1.0;
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_diffusion(const DensityMatrix& rho) {
  // (KρK)_ij = ρ_ij − 2 r_i − 2 c_j + 4 g with r, c the row and column means
  // of ρ and g its grand mean.
  const auto& m = rho.matrix();
  const double inv_n = 1.0 / static_cast<double>(m.rows());
  const Eigen::VectorXcd row_mean = m.rowwise().sum() * inv_n;
  const Eigen::RowVectorXcd col_mean = m.colwise().sum() * inv_n;
  const std::complex<double> grand = row_mean.sum() * inv_n;
  Eigen::MatrixXcd out = m;
  out.colwise() -= 2.0 * row_mean;
  out.rowwise() -= 2.0 * col_mean;
  out.array() += 4.0 * grand;
  return DensityMatrix(std::move(out));
}

DensityMatrix noisy_grover_step(const DensityMatrix& rho, [[maybe_unused]] const SearchSpace& space,
                                const MarkedSet& marked, const NoiseLevel& noise) {
  DensityMatrix out = apply_collective_dephasing(rho, marked, noise);
  out = apply_oracle(out, marked);
  out = apply_collective_dephasing(out, marked, noise);
  return apply_diffusion(out);
}

double success_probability_full(const DensityMatrix& rho, const MarkedSet& marked) {
  double p = 0.0;
  for (auto x : marked.indices()) {
    const auto k = static_cast<Eigen::Index>(x);
    p += rho.matrix()(k, k).real();
  }
  return p;
}

EffectiveProjection project_effective(const DensityMatrix& rho, const MarkedSet& marked) {
  const auto& m = rho.matrix();
  const Eigen::Index n = m.rows();
  std::complex<double> ww = 0.0;
  std::complex<double> wm = 0.0;
  std::complex<double> mm = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const bool mj = marked.contains(static_cast<std::uint64_t>(j));
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool mi = marked.contains(static_cast<std::uint64_t>(i));
      if (mi && mj) {
        mm += m(i, j);
      } else if (!mi && !mj) {
        ww += m(i, j);
      } else if (!mi && mj) {
        wm += m(i, j);
      }
    }
  }
  const double count_m = static_cast<double>(marked.size());
  const double count_w = static_cast<double>(n) - count_m;
  const double w_w = ww.real() / count_w;
  const double m_m = mm.real() / count_m;
  const double w_m = wm.real() / std::sqrt(count_w * count_m);

  EffectiveProjection proj;
  proj.bloch = {2.0 * w_m, w_w - m_m};
  proj.leakage = m.trace().real() - w_w - m_m;
  return proj;
}

BlochVec2 effective_bloch(const DensityMatrix& rho, [[maybe_unused]] const SearchSpace& space,
                          const MarkedSet& marked, double tolerance) {
  const EffectiveProjection proj = project_effective(rho, marked);
  if (std::abs(proj.leakage) > tolerance) {
    throw SubspaceLeakage("density matrix has weight " + std::to_string(proj.leakage) +
                              " outside span{|w>, |m>}",
                          proj.leakage);
  }
  return proj.bloch;
}

std::vector<DensityMatrix> fullstate_trajectory(const SearchSpace& space,
                                                const MarkedSet& marked,
                                                const NoiseLevel& noise, std::size_t steps) {
  std::vector<DensityMatrix> out;
  out.reserve(steps + 1);
  out.push_back(init_uniform(space));
  for (std::size_t t = 0; t < steps; ++t) {
    out.push_back(noisy_grover_step(out.back(), space, marked, noise));
  }
  return out;
}

}  // namespace ngrover
