#include "ngrover/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace ngrover {

namespace {

double xlogx(double p) { return p <= 1e-300 ? 0.0 : p * std::log(p); }

// −p ln(p / w): entropy contribution of a block of `w` equal entries summing to p.
double block_entropy(double p, double w) { return p <= 1e-300 ? 0.0 : -p * std::log(p / w); }

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> diagonalize(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return solver;
}

}  // namespace

double von_neumann_entropy(std::span<const double> spectrum) {
  double total = 0.0;
  double h = 0.0;
  for (double p : spectrum) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative or NaN probability in spectrum");
    total += p;
    h -= xlogx(p);
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("spectrum does not sum to 1");
  }
  return h;
}

std::pair<double, double> state_spectrum(const BlochVec2& v) noexcept {
  const double r = std::min(v.norm(), 1.0);
  return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (double p : solver.eigenvalues()) h -= xlogx(std::max(p, 0.0));
  return h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  const auto er = diagonalize(rho);
  const auto es = diagonalize(sigma);
  const Eigen::VectorXd& pr = er.eigenvalues();
  const Eigen::VectorXd& ps = es.eigenvalues();

  // Basis of supp σ.
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < ps.size(); ++k) {
    if (ps(k) > kRankTolerance) support.push_back(k);
  }

  double tr_rho_log_rho = 0.0;
  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index i = 0; i < pr.size(); ++i) {
    if (pr(i) <= kRankTolerance) continue;
    const Eigen::VectorXcd u = er.eigenvectors().col(i);
    double inside = 0.0;
    double weighted_log = 0.0;
    for (Eigen::Index k : support) {
      const double overlap = std::norm(es.eigenvectors().col(k).dot(u));
      inside += overlap;
      weighted_log += overlap * std::log(ps(k));
    }
    if (inside < 1.0 - kRankTolerance) return std::numeric_limits<double>::infinity();
    tr_rho_log_rho += xlogx(pr(i));
    tr_rho_log_sigma += pr(i) * weighted_log;
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

DensityMatrix dephased(const DensityMatrix& rho) {
  return DensityMatrix(rho.matrix().diagonal().asDiagonal());
}

CoherenceValues coherence_rel_entropy(const BlochVec2& v, const SearchSpace& space) {
  const auto [hi, lo] = state_spectrum(v);
  const double eig[] = {hi, lo};
  const double p = v.success_probability();
  const double m = static_cast<double>(space.marked_count());
  const double rest = static_cast<double>(space.n_items()) - m;

  CoherenceValues out;
  out.s1 = von_neumann_entropy(eig);
  out.s1_diag = block_entropy(p, m) + block_entropy(1.0 - p, rest);
  out.c1 = out.s1_diag - out.s1;
  return out;
}

CoherenceValues coherence_full(const DensityMatrix& rho) {
  CoherenceValues out;
  out.s1 = von_neumann_entropy(rho);
  for (Eigen::Index k = 0; k < rho.dimension(); ++k) {
    out.s1_diag -= xlogx(std::max(rho.matrix()(k, k).real(), 0.0));
  }
  out.c1 = out.s1_diag - out.s1;
  return out;
}

TradeoffBounds tradeoff_bounds(double p_suc, const SearchSpace& space) {
  const double m = static_cast<double>(space.marked_count());
  const double rest = static_cast<double>(space.n_items()) - m;
  const double q = 1.0 - p_suc;
  return {-xlogx(p_suc) - xlogx(q), block_entropy(p_suc, m) + block_entropy(q, rest)};
}

CoherenceRecord coherence_record(std::size_t t, const BlochVec2& v, const SearchSpace& space) {
  const CoherenceValues c = coherence_rel_entropy(v, space);
  const double p = v.success_probability();
  const TradeoffBounds b = tradeoff_bounds(p, space);
  return {t, p, c.s1, c.s1_diag, c.c1, b.lower, b.upper};
}

double asymptotic_coherence(const SearchSpace& space) noexcept {
  const double m = static_cast<double>(space.marked_count());
  const double n = static_cast<double>(space.n_items());
  return 0.5 * std::log(m * n - m * m);
}

}  // namespace ngrover
