// SPDX-License-Identifier: Apache-2.0
#include "traincap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "traincap/errors.hpp"

namespace traincap {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_matching_dims(const ChannelStats& stats,
                           const SymMatrixX& error_cov) {
  if (error_cov.dim() != stats.antennas()) {
    throw DimensionMismatchError(
        "error covariance is " + std::to_string(error_cov.dim()) +
        "-dimensional, channel has " + std::to_string(stats.antennas()) +
        " antennas");
  }
}

double log2_det_shifted(const SymMatrixX& base, double scale) {
  const Index m = base.dim();
  const SymMatrixX shifted(scale * base.matrix() + MatX::Identity(m, m));
  return log_det(shifted) / kLn2;
}

}  // namespace

InputSpectrum::InputSpectrum(std::vector<double> sigmas)
    : sigmas_(std::move(sigmas)) {
  if (sigmas_.empty()) {
    throw InvalidConfigError("input spectrum must contain at least one value");
  }
  for (double s : sigmas_) {
    if (!(s >= 0.0)) {
      throw InvalidConfigError("input spectrum values must be nonnegative, got " +
                               std::to_string(s));
    }
  }
}

CapacityValue capacity(const ChannelStats& stats, const LinkBudget& budget,
                       const TrainingPlan& plan) {
  const int block = budget.block_length;
  if (plan.t_tau < 0 || plan.t_tau > block) {
    throw InvalidPlanError("training length " + std::to_string(plan.t_tau) +
                           " outside [0, " + std::to_string(block) + "]");
  }
  if (plan.t_tau == 0) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    return {neg_inf, neg_inf};
  }
  const SymMatrixX err_cov = error_covariance(stats, budget, plan);
  double gap = log2_det_shifted(stats.covariance(), budget.power) -
               log2_det_shifted(err_cov, budget.power);
  // err_cov never exceeds the prior in the PSD order, so the true gap is
  // nonnegative; clamp the roundoff of the two independent determinants.
  gap = std::max(gap, 0.0);
  const double bits = static_cast<double>(block - plan.t_tau) * gap;
  return {bits, bits / static_cast<double>(block)};
}

double mutual_information_kronecker(const InputSpectrum& spectrum,
                                    const ChannelStats& stats,
                                    const SymMatrixX& error_cov) {
  require_matching_dims(stats, error_cov);
  const VecX prior_eigs = sym_eigen(stats.covariance()).eigenvalues;
  const VecX error_eigs = sym_eigen(error_cov).eigenvalues;
  double bits = 0.0;
  for (double sigma : spectrum.sigmas()) {
    for (Index j = 0; j < prior_eigs.size(); ++j) {
      bits += std::log2(sigma * prior_eigs[j] + 1.0) -
              std::log2(sigma * error_eigs[j] + 1.0);
    }
  }
  return bits;
}

double mutual_information_kronecker(const SymMatrixX& input_cov,
                                    const ChannelStats& stats,
                                    const SymMatrixX& error_cov) {
  const VecX eigs = sym_eigen(input_cov).eigenvalues;
  std::vector<double> sigmas(eigs.data(), eigs.data() + eigs.size());
  // PSD input covariances can produce tiny negative eigenvalues in floating
  // point; treat them as zero power.
  for (double& s : sigmas) s = std::max(s, 0.0);
  return mutual_information_kronecker(InputSpectrum(std::move(sigmas)), stats,
                                      error_cov);
}

double mutual_information_kronecker_direct(const SymMatrixX& input_cov,
                                           const ChannelStats& stats,
                                           const SymMatrixX& error_cov) {
  require_matching_dims(stats, error_cov);
  const Index m = stats.antennas();
  const Index t_d = input_cov.dim();
  const Index n = t_d * m;
  if (n > 64) {
    throw InvalidConfigError(
        "materialized Kronecker cross-check limited to dimension 64, got " +
        std::to_string(n));
  }
  const auto shifted_kron = [&](const MatX& block) {
    MatX out = MatX::Zero(n, n);
    for (Index i = 0; i < t_d; ++i) {
      for (Index j = 0; j < t_d; ++j) {
        out.block(i * m, j * m, m, m) = input_cov(i, j) * block;
      }
    }
    out += MatX::Identity(n, n);
    return SymMatrixX(out);
  };
  return (log_det(shifted_kron(stats.covariance().matrix())) -
          log_det(shifted_kron(error_cov.matrix()))) /
         kLn2;
}

double capacity_high_power_approx(const ChannelStats& stats,
                                  const LinkBudget& budget,
                                  const TrainingPlan& plan) {
  const int block = budget.block_length;
  if (plan.t_tau < 1 || plan.t_tau > block) {
    throw InvalidPlanError("training length " + std::to_string(plan.t_tau) +
                           " outside [1, " + std::to_string(block) + "]");
  }
  const double m = static_cast<double>(stats.antennas());
  // log2 det(P*C) = m*log2(P) + log2 det(C); throws if C is singular.
  const double log2_det_pc =
      m * std::log2(budget.power) + log_det(stats.covariance()) / kLn2;
  const double t_tau = static_cast<double>(plan.t_tau);
  return static_cast<double>(block - plan.t_tau) *
         (log2_det_pc - m * std::log2(1.0 / t_tau + 1.0));
}

double error_floor_low_power(const ChannelStats& stats,
                             const LinkBudget& budget,
                             const TrainingPlan& plan) {
  const SymMatrixX err_cov = error_covariance(stats, budget, plan);
  const double prior_norm = stats.covariance().matrix().norm();
  if (prior_norm == 0.0) return 0.0;
  return (err_cov.matrix() - stats.covariance().matrix()).norm() / prior_norm;
}

}  // namespace traincap
