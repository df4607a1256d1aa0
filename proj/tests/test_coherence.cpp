#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "ngrover/channels.hpp"
#include "ngrover/closed_form.hpp"
#include "ngrover/coherence.hpp"
#include "ngrover/fullstate.hpp"
#include "oracles.hpp"

using namespace ngrover;
using doctest::Approx;

TEST_CASE("von Neumann entropy of spectra") {
  const double pure[] = {1.0, 0.0};
  CHECK(von_neumann_entropy(pure) == 0.0);
  const double half[] = {0.5, 0.5};
  CHECK(von_neumann_entropy(half) == Approx(std::log(2.0)).epsilon(1e-15));
  const double skew[] = {0.8, 0.2};
  CHECK(von_neumann_entropy(skew) == Approx(0.50040242353818788).epsilon(1e-15));

  const double negative[] = {1.1, -0.1};
  CHECK_THROWS_AS(von_neumann_entropy(negative), std::invalid_argument);
  const double short_sum[] = {0.5, 0.4};
  CHECK_THROWS_AS(von_neumann_entropy(short_sum), std::invalid_argument);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(2 + trial % 30);
    double total = 0;
    for (auto& x : p) total += (x = u(rng));
    for (auto& x : p) x /= total;
    const double h = von_neumann_entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(double(p.size())) + 1e-12);
  }
}

TEST_CASE("state spectrum") {
  auto [a, b] = state_spectrum({0.0, 0.0});
  CHECK(a == 0.5);
  CHECK(b == 0.5);
  const SearchSpace s = derive_search_space(64, 1);
  std::tie(a, b) = state_spectrum(initial_bloch(s));
  CHECK(a == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(b) < 1e-15);
  std::tie(a, b) = state_spectrum({0.3, 0.4});
  CHECK(a == Approx(0.75).epsilon(1e-15));
  CHECK(b == Approx(0.25).epsilon(1e-14));
  // Slightly unphysical input is clamped.
  std::tie(a, b) = state_spectrum({1.0 + 1e-13, 0.0});
  CHECK(a == 1.0);
  CHECK(b == 0.0);
}

TEST_CASE("relative entropy") {
  const SearchSpace s = derive_search_space(16, 2);
  const DensityMatrix pure = init_uniform(s);
  CHECK(std::abs(relative_entropy(pure, pure)) < 1e-12);

  const DensityMatrix mixed(Eigen::MatrixXcd::Identity(16, 16) / 16.0);
  CHECK(relative_entropy(pure, mixed) == Approx(std::log(16.0)).epsilon(1e-12));
  CHECK(std::abs(relative_entropy(mixed, mixed)) < 1e-12);

  Eigen::MatrixXcd e0 = Eigen::MatrixXcd::Zero(16, 16);
  Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(16, 16);
  e0(0, 0) = 1.0;
  e1(1, 1) = 1.0;
  CHECK(relative_entropy(DensityMatrix(e0), DensityMatrix(e1)) ==
        std::numeric_limits<double>::infinity());
  // The mixed state is not supported on a pure one.
  CHECK(relative_entropy(mixed, pure) == std::numeric_limits<double>::infinity());

  CHECK_THROWS_AS(relative_entropy(pure, DensityMatrix(Eigen::MatrixXcd::Identity(4, 4) / 4.0)),
                  std::invalid_argument);
}

TEST_CASE("relative entropy of coherence from the Bloch vector") {
  const SearchSpace s = derive_search_space(64, 1);

  const CoherenceValues c0 = coherence_rel_entropy(initial_bloch(s), s);
  CHECK(std::abs(c0.s1) < 1e-14);
  CHECK(c0.c1 == Approx(std::log(64.0)).epsilon(1e-14));
  CHECK(c0.c1 == Approx(4.1588830833596719).epsilon(1e-14));

  const CoherenceValues inf = coherence_rel_entropy({0.0, 0.0}, s);
  CHECK(inf.c1 == Approx(0.5 * std::log(63.0)).epsilon(1e-14));
  CHECK(std::abs(inf.c1 - 2.072) < 5e-4);
  CHECK(asymptotic_coherence(s) == Approx(2.0715673631957663).epsilon(1e-14));

  // η = 0.9, t = 5: value from the 40-digit recursion; full-state check below.
  const auto tr = trajectory(s, NoiseLevel::from_eta(0.9), 5);
  const CoherenceValues c5 = coherence_rel_entropy(tr[5].bloch, s);
  CHECK(c5.c1 == Approx(0.76498342473650672).epsilon(1e-12));
  CHECK(c5.s1 == Approx(0.39565514881477198).epsilon(1e-12));
}

TEST_CASE("trade-off bounds") {
  const SearchSpace s1 = derive_search_space(2, 1);
  TradeoffBounds b = tradeoff_bounds(1.0, s1);
  CHECK(b.lower == 0.0);
  CHECK(b.upper == 0.0);

  const SearchSpace s = derive_search_space(64, 1);
  b = tradeoff_bounds(0.5, s);
  CHECK(b.upper == Approx(0.5 * std::log(252.0)).epsilon(1e-15));
  CHECK(b.upper == Approx(0.5 * std::log(63.0) + std::log(2.0)).epsilon(1e-15));
  CHECK(b.lower == Approx(std::log(2.0)).epsilon(1e-15));

  // Initial point P = M/N: the upper bound is ln N (uniform diagonal).
  b = tradeoff_bounds(1.0 / 64, s);
  CHECK(b.upper == Approx(std::log(64.0)).epsilon(1e-14));
  const double p = 1.0 / 64;
  CHECK(b.lower == Approx(-p * std::log(p) - (1 - p) * std::log(1 - p)).epsilon(1e-14));

  for (int k = 0; k <= 100; ++k) {
    const double q = k / 100.0;
    for (std::uint64_t m : {1u, 4u, 16u, 32u}) {
      const TradeoffBounds tb = tradeoff_bounds(q, derive_search_space(64, m));
      CHECK(tb.lower <= tb.upper + 1e-15);
    }
  }
}

TEST_CASE("sandwich and saturation along 2D trajectories") {
  for (std::uint64_t n : {4u, 16u, 64u, 256u}) {
    for (std::uint64_t m : {std::uint64_t{1}, n / 4, n / 2}) {
      const SearchSpace s = derive_search_space(n, m);
      for (double eta : {0.05, 0.2, 0.5, 0.9, 0.99, 1.0}) {
        const auto tr = trajectory(s, NoiseLevel::from_eta(eta), 100);
        const auto ref = oracle::channel_trajectory(n, m, eta, 100);
        for (const auto& rec : tr) {
          const CoherenceRecord c = coherence_record(rec.t, rec.bloch, s);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(eta);
          CAPTURE(rec.t);
          CHECK(c.c1 >= -1e-12);
          CHECK(c.lower_bound <= c.c1 + c.s1 + 1e-12);
          CHECK(c.c1 + c.s1 <= c.upper_bound + 1e-12);
          CHECK(std::abs(c.c1 + c.s1 - c.upper_bound) <= 1e-10);
          CHECK(std::abs(c.c1 - double(oracle::coherence(n, m, ref[rec.t]))) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("saturation and agreement with the full density matrix") {
  for (std::uint64_t n : {4u, 16u, 64u}) {
    for (std::uint64_t m : {std::uint64_t{1}, n / 4, n / 2}) {
      const SearchSpace s = derive_search_space(n, m);
      const MarkedSet marked = MarkedSet::evenly_spaced(s);
      for (double eta : {0.05, 0.5, 0.9, 1.0}) {
        const NoiseLevel noise = NoiseLevel::from_eta(eta);
        const auto tr = trajectory(s, noise, 40);
        DensityMatrix rho = init_uniform(s);
        for (std::size_t t = 0; t <= 40; ++t) {
          if (t > 0) rho = noisy_grover_step(rho, s, marked, noise);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(eta);
          CAPTURE(t);
          const CoherenceValues flat = coherence_rel_entropy(tr[t].bloch, s);
          const CoherenceValues full = coherence_full(rho);
          CHECK(std::abs(flat.c1 - full.c1) <= 1e-9);
          CHECK(std::abs(flat.s1 - full.s1) <= 1e-9);
          // C₁ is the relative entropy to the dephased state.
          if (t % 8 == 0) {
            CHECK(std::abs(relative_entropy(rho, dephased(rho)) - flat.c1) <= 1e-9);
          }
          const double p = success_probability_full(rho, marked);
          const TradeoffBounds b = tradeoff_bounds(p, s);
          CHECK(std::abs(full.c1 + full.s1 - b.upper) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("full-state coherence at N=64, M=1, eta=0.9, t=5") {
  const SearchSpace s = derive_search_space(64, 1);
  const MarkedSet marked = MarkedSet::evenly_spaced(s);
  const auto states = fullstate_trajectory(s, marked, NoiseLevel::from_eta(0.9), 5);
  const CoherenceValues c = coherence_full(states[5]);
  CHECK(c.c1 == Approx(0.76498342473650672).epsilon(1e-10));
  CHECK(relative_entropy(states[5], dephased(states[5])) ==
        Approx(0.76498342473650672).epsilon(1e-10));
}

TEST_CASE("dephased state minimizes the relative entropy among diagonal states") {
  const SearchSpace s = derive_search_space(16, 2);
  const MarkedSet marked = MarkedSet::evenly_spaced(s);
  const auto states = fullstate_trajectory(s, marked, NoiseLevel::from_eta(0.7), 4);
  const DensityMatrix& rho = states[4];
  const double best = relative_entropy(rho, dephased(rho));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd d(16);
    for (Eigen::Index k = 0; k < 16; ++k) d(k) = u(rng);
    d /= d.sum();
    const DensityMatrix delta(Eigen::MatrixXcd(d.cast<std::complex<double>>().asDiagonal()));
    CHECK(relative_entropy(rho, delta) >= best - 1e-12);
  }
}

TEST_CASE("noiseless anti-phase of success probability and coherence") {
  const SearchSpace s = derive_search_space(64, 1);
  const auto tr = trajectory(s, NoiseLevel::from_eta(1.0), 50);
  std::vector<double> p;
  std::vector<double> c;
  for (const auto& rec : tr) {
    p.push_back(rec.p_suc);
    c.push_back(coherence_rel_entropy(rec.bloch, s).c1);
  }
  std::vector<std::size_t> p_peaks;
  std::vector<std::size_t> c_valleys;
  for (std::size_t t = 1; t + 1 < p.size(); ++t) {
    if (p[t] > p[t - 1] && p[t] > p[t + 1]) p_peaks.push_back(t);
    if (c[t] < c[t - 1] && c[t] < c[t + 1]) c_valleys.push_back(t);
  }
  CHECK(p_peaks.size() >= 3);
  CHECK(p_peaks == c_valleys);
}

TEST_CASE("coherence approaches its asymptote") {
  const SearchSpace s = derive_search_space(64, 1);
  for (double eta : {0.5, 0.9, 0.99}) {
    const NoiseLevel noise = NoiseLevel::from_eta(eta);
    const ClosedFormSolution sol(s, noise);
    const auto steps = static_cast<std::size_t>(std::ceil(2 * std::log(1e-4) / std::log(eta))) + 1;
    CHECK(std::pow(eta, steps / 2.0) < 1e-4);
    const CoherenceValues c = coherence_rel_entropy(bloch_closed(sol, steps), s);
    CHECK(std::abs(c.c1 - asymptotic_coherence(s)) < 1e-3);
  }
}
