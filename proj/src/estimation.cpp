// SPDX-License-Identifier: Apache-2.0
#include "traincap/estimation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "traincap/errors.hpp"

namespace traincap {
namespace {

void require_valid_plan(const LinkBudget& budget, const TrainingPlan& plan) {
  if (plan.t_tau < 1 || plan.t_tau > budget.block_length) {
    throw InvalidPlanError("training length " + std::to_string(plan.t_tau) +
                           " outside [1, " +
                           std::to_string(budget.block_length) + "]");
  }
}

// P*C + (1/t_tau)*I, the pilot-averaged observation covariance. Positive
// definite for any PSD C and t_tau >= 1.
SymMatrixX regularized_prior(const ChannelStats& stats, double power,
                             int t_tau) {
  const Index m = stats.antennas();
  return SymMatrixX(power * stats.covariance().matrix() +
                    MatX::Identity(m, m) / static_cast<double>(t_tau));
}

}  // namespace

ChannelStats::ChannelStats(SymMatrixX c) : c_(std::move(c)) {
  const auto report = check_spd(c_);
  if (!report.is_psd) {
    throw NotPsdError("channel covariance has eigenvalue " +
                      detail::format_value(report.min_eigenvalue) +
                      ", below the positive-semidefinite tolerance");
  }
}

LinkBudget::LinkBudget(double power_in, int block_length_in)
    : power(power_in), block_length(block_length_in) {
  if (!std::isfinite(power) || power < 0.0) {
    throw InvalidConfigError("power must be finite and nonnegative, got " +
                             std::to_string(power));
  }
  if (block_length < 2) {
    throw InvalidConfigError("block length must be at least 2, got " +
                             std::to_string(block_length));
  }
}

EstimatorStats estimator_stats(const ChannelStats& stats,
                               const LinkBudget& budget,
                               const TrainingPlan& plan) {
  require_valid_plan(budget, plan);
  const Index m = stats.antennas();
  const MatX& c = stats.covariance().matrix();
  const SymMatrixX gram = regularized_prior(stats, budget.power, plan.t_tau);
  // X = (P*C + I/t_tau)^{-1} C; the analytic results below are symmetric,
  // the SymMatrix constructor restores exact symmetry lost to roundoff.
  const MatX x = solve_spd(gram, c);
  SymMatrixX estimate_cov(budget.power * (c * x));
  SymMatrixX error_cov(x / static_cast<double>(plan.t_tau));
  SymMatrixX noise_cov(MatX::Identity(m, m) +
                       budget.power * error_cov.matrix());
  return {std::move(estimate_cov), std::move(error_cov), std::move(noise_cov)};
}

SymMatrixX error_covariance(const ChannelStats& stats, const LinkBudget& budget,
                            const TrainingPlan& plan) {
  require_valid_plan(budget, plan);
  const MatX x = solve_spd(regularized_prior(stats, budget.power, plan.t_tau),
                           stats.covariance().matrix());
  return SymMatrixX(x / static_cast<double>(plan.t_tau));
}

SymMatrixX estimated_covariance(const ChannelStats& stats,
                                const LinkBudget& budget,
                                const TrainingPlan& plan) {
  require_valid_plan(budget, plan);
  const MatX& c = stats.covariance().matrix();
  const MatX x = solve_spd(regularized_prior(stats, budget.power, plan.t_tau), c);
  return SymMatrixX(budget.power * (c * x));
}

SymMatrixX effective_noise(const ChannelStats& stats, const LinkBudget& budget,
                           const TrainingPlan& plan) {
  const Index m = stats.antennas();
  return SymMatrixX(MatX::Identity(m, m) +
                    budget.power * error_covariance(stats, budget, plan).matrix());
}

VecX mmse_estimate(const ChannelStats& stats, const LinkBudget& budget,
                   const TrainingObservation& obs) {
  if (obs.y_list.empty()) {
    throw DimensionMismatchError("mmse_estimate: no pilot measurements");
  }
  const Index m = stats.antennas();
  for (const VecX& y : obs.y_list) {
    if (y.size() != m) {
      throw DimensionMismatchError("mmse_estimate: measurement has " +
                                   std::to_string(y.size()) +
                                   " entries, expected " + std::to_string(m));
    }
  }
  const double amp_sq = obs.pilot_amplitude * obs.pilot_amplitude;
  if (std::abs(amp_sq - budget.power) > 1e-12 * budget.power) {
    throw InvalidConfigError("pilot amplitude squared " +
                             std::to_string(amp_sq) +
                             " does not match the per-symbol power " +
                             std::to_string(budget.power));
  }
  const int t_tau = static_cast<int>(obs.y_list.size());
  if (t_tau > budget.block_length) {
    throw InvalidPlanError("more pilot measurements than block symbols");
  }

  VecX y_mean = VecX::Zero(m);
  for (const VecX& y : obs.y_list) y_mean += y;
  y_mean /= static_cast<double>(t_tau);

  const SymMatrixX gram = regularized_prior(stats, budget.power, t_tau);
  const MatX weighted = solve_spd(gram, MatX(y_mean));
  return obs.pilot_amplitude * (stats.covariance().matrix() * weighted);
}

}  // namespace traincap
