// SPDX-License-Identifier: Apache-2.0
//
// Seeded Monte Carlo validation of the estimator statistics, plus a
// randomized oracle for the equal-power-allocation claim.
//
// The simulator draws i.i.d. channel and noise realizations, runs the linear
// MMSE estimator on the simulated pilot observations, and accumulates sample
// second moments of the estimate and the estimation error. Accumulation is
// sequential, so a report is a pure function of (config, seed).
#pragma once

#include <cstdint>
#include <vector>

#include "traincap/estimation.hpp"
#include "traincap/rng.hpp"
#include "traincap/types.hpp"

namespace traincap {

struct SimConfig {
  ChannelStats stats;
  LinkBudget budget;
  TrainingPlan plan;
  std::uint64_t seed = 0;
  int num_trials = 0;
};

/// Sample second moments from `num_trials` independent estimation rounds.
/// `empirical_c_hat` and `empirical_c_tilde` estimate the covariance of the
/// channel estimate and of the estimation error; `cross_cov` estimates the
/// (ideally zero) covariance between them. `frobenius_rel_err_c_tilde` is the
/// relative Frobenius distance between `empirical_c_tilde` and its analytic
/// counterpart.
struct SimReport {
  MatX empirical_c_hat;
  MatX empirical_c_tilde;
  MatX cross_cov;
  double frobenius_rel_err_c_tilde = 0.0;
  int num_trials = 0;
  std::uint64_t seed = 0;
};

/// Result of comparing randomly drawn data-power allocations against the
/// equal split of the same total power.
struct AmgmOracleReport {
  double max_random_mi = 0.0;
  double equal_power_mi = 0.0;
  int num_spectra = 0;
};

/// Left factor F with F * F^T equal to the covariance of `stats`. Uses the
/// Cholesky factor when the matrix is positive definite and falls back to an
/// eigendecomposition square root for singular PSD inputs.
MatX covariance_factor(const ChannelStats& stats);

/// Standard normal vector of length `dim` drawn from `rng`.
VecX sample_gaussian_vector(Index dim, GaussianSampler& rng);

/// Draw order is fixed per trial (the m channel variates, then the t_tau
/// pilot noise vectors), so a given seed yields bit-identical reports.
SimReport run_estimation_sim(const SimConfig& config);

/// Draws `num_spectra` random nonnegative power allocations over `t_d` data
/// symbols (independent uniforms normalized to total power `t_d * power`),
/// and records the best mutual information found alongside the
/// equal-allocation value. `c_tilde` is the estimation-error covariance the
/// allocations compete against. Requires t_d >= 2.
AmgmOracleReport amgm_oracle(const ChannelStats& stats,
                             const SymMatrixX& c_tilde, double power, int t_d,
                             int num_spectra, std::uint64_t seed);

}  // namespace traincap
