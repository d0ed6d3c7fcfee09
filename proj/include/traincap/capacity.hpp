// SPDX-License-Identifier: Apache-2.0
//
// Worst-case capacity of the training-based SIMO block: the exact
// log-determinant formula, the general Kronecker-structured Gaussian mutual
// information it derives from, and the high/low power approximations.
//
// Capacities are reported in bits (log base 2) per coherence block. The
// log-determinant difference is used as-is for the real-valued channel; no
// 1/2 prefactor is applied.
#pragma once

#include <vector>

#include "traincap/estimation.hpp"
#include "traincap/spd.hpp"
#include "traincap/types.hpp"

namespace traincap {

struct CapacityValue {
  double bits_per_block = 0.0;  // -infinity when no symbol is spent on training
  double bits_per_symbol = 0.0;
};

/// Eigenvalues of the data-symbol input covariance across the T_d data slots.
class InputSpectrum {
 public:
  explicit InputSpectrum(std::vector<double> sigmas);

  const std::vector<double>& sigmas() const { return sigmas_; }
  int data_symbols() const { return static_cast<int>(sigmas_.size()); }

 private:
  std::vector<double> sigmas_;
};

/// Worst-case capacity of the block when plan.t_tau symbols train the
/// estimator and the rest carry data:
///
///   (T - t_tau) * (log2 det(P*C + I) - log2 det(P*err_cov + I))
///
/// t_tau = T yields exactly zero (nothing left for data); t_tau = 0 yields
/// -infinity (no estimate, unbounded error).
CapacityValue capacity(const ChannelStats& stats, const LinkBudget& budget,
                       const TrainingPlan& plan);

/// Mutual information between the data symbols and the received block for an
/// arbitrary input spectrum, evaluated on the eigenvalues of the channel
/// prior and of the estimation-error covariance:
///
///   sum_i [ log2 det(sigma_i*C + I) - log2 det(sigma_i*err_cov + I) ]
double mutual_information_kronecker(const InputSpectrum& spectrum,
                                    const ChannelStats& stats,
                                    const SymMatrixX& error_cov);

/// Convenience overload: extracts the spectrum of a full input covariance.
double mutual_information_kronecker(const SymMatrixX& input_cov,
                                    const ChannelStats& stats,
                                    const SymMatrixX& error_cov);

/// Same quantity computed the blunt way, materializing the Kronecker
/// products kron(X_d, C) + I and taking dense log-determinants. Serves as an
/// independent cross-check of the spectral form; limited to blocks with
/// data_symbols * antennas <= 64.
double mutual_information_kronecker_direct(const SymMatrixX& input_cov,
                                           const ChannelStats& stats,
                                           const SymMatrixX& error_cov);

/// High-power approximation
///   (T - t_tau) * (log2 det(P*C) - m * log2(1/t_tau + 1)).
/// Requires a strictly positive definite prior; the exact formula does not.
double capacity_high_power_approx(const ChannelStats& stats,
                                  const LinkBudget& budget,
                                  const TrainingPlan& plan);

/// Relative Frobenius distance of the estimation-error covariance from its
/// zero-power limit (the prior itself): ||err_cov - C||_F / ||C||_F.
/// Close to 0 at vanishing power, close to 1 when t_tau * P is large.
double error_floor_low_power(const ChannelStats& stats,
                             const LinkBudget& budget,
                             const TrainingPlan& plan);

}  // namespace traincap
