// SPDX-License-Identifier: Apache-2.0
#include "traincap/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "traincap/capacity.hpp"
#include "traincap/errors.hpp"
#include "traincap/spd.hpp"

namespace traincap {

MatX covariance_factor(const ChannelStats& stats) {
  const SymMatrixX& c = stats.covariance();
  try {
    return cholesky(c);
  } catch (const NotPositiveDefiniteError&) {
    // Singular PSD covariance: use the eigendecomposition square root
    // U * sqrt(max(lambda, 0)).
    const auto eig = sym_eigen(c);
    VecX roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors * roots.asDiagonal();
  }
}

VecX sample_gaussian_vector(Index dim, GaussianSampler& rng) {
  VecX v(dim);
  for (Index i = 0; i < dim; ++i) {
    v(i) = rng.next();
  }
  return v;
}

SimReport run_estimation_sim(const SimConfig& config) {
  if (config.num_trials <= 0) {
    throw InvalidConfigError("num_trials must be positive, got " +
                             std::to_string(config.num_trials));
  }
  const EstimatorStats analytic =
      estimator_stats(config.stats, config.budget, config.plan);
  const Index m = config.stats.antennas();
  const MatX factor = covariance_factor(config.stats);
  const double amplitude = std::sqrt(config.budget.power);

  GaussianSampler rng(config.seed);
  MatX sum_hat_hat = MatX::Zero(m, m);
  MatX sum_err_err = MatX::Zero(m, m);
  MatX sum_hat_err = MatX::Zero(m, m);

  TrainingObservation obs;
  obs.pilot_amplitude = amplitude;
  obs.y_list.resize(static_cast<std::size_t>(config.plan.t_tau));

  // Fixed draw order per trial: m channel variates, then t_tau noise vectors
  // of m variates each. Reports are reproducible from the seed alone.
  for (int trial = 0; trial < config.num_trials; ++trial) {
    const VecX h = factor * sample_gaussian_vector(m, rng);
    for (int t = 0; t < config.plan.t_tau; ++t) {
      obs.y_list[static_cast<std::size_t>(t)] =
          amplitude * h + sample_gaussian_vector(m, rng);
    }
    const VecX h_hat = mmse_estimate(config.stats, config.budget, obs);
    const VecX err = h - h_hat;
    sum_hat_hat += h_hat * h_hat.transpose();
    sum_err_err += err * err.transpose();
    sum_hat_err += h_hat * err.transpose();
  }

  const double inv_n = 1.0 / static_cast<double>(config.num_trials);
  SimReport report;
  report.empirical_c_hat = inv_n * sum_hat_hat;
  report.empirical_c_tilde = inv_n * sum_err_err;
  report.cross_cov = inv_n * sum_hat_err;
  const double denom = analytic.error_cov.matrix().norm();
  report.frobenius_rel_err_c_tilde =
      denom > 0.0
          ? (report.empirical_c_tilde - analytic.error_cov.matrix()).norm() /
                denom
          : report.empirical_c_tilde.norm();
  report.num_trials = config.num_trials;
  report.seed = config.seed;
  return report;
}

AmgmOracleReport amgm_oracle(const ChannelStats& stats,
                             const SymMatrixX& c_tilde, double power, int t_d,
                             int num_spectra, std::uint64_t seed) {
  if (t_d < 2) {
    throw InvalidConfigError("t_d must be at least 2, got " +
                             std::to_string(t_d));
  }
  if (num_spectra <= 0) {
    throw InvalidConfigError("num_spectra must be positive, got " +
                             std::to_string(num_spectra));
  }
  const double total_power = static_cast<double>(t_d) * power;

  const InputSpectrum equal(
      std::vector<double>(static_cast<std::size_t>(t_d), power));
  AmgmOracleReport report;
  report.equal_power_mi = mutual_information_kronecker(equal, stats, c_tilde);
  report.num_spectra = num_spectra;

  SplitMix64 rng(seed);
  std::vector<double> sigmas(static_cast<std::size_t>(t_d));
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < num_spectra; ++s) {
    double sum = 0.0;
    for (double& sigma : sigmas) {
      sigma = rng.next_unit();
      sum += sigma;
    }
    const double scale = total_power / sum;
    for (double& sigma : sigmas) {
      sigma *= scale;
    }
    const InputSpectrum spectrum(sigmas);
    best = std::max(best,
                    mutual_information_kronecker(spectrum, stats, c_tilde));
  }
  report.max_random_mi = best;
  return report;
}

}  // namespace traincap
