// SPDX-License-Identifier: Apache-2.0
//
// Training-phase MMSE channel estimation statistics for a block-fading SIMO
// link: the estimator itself, the covariance split it induces on the channel
// prior, and the effective noise seen by the data symbols.
#pragma once

#include <vector>

#include "traincap/spd.hpp"
#include "traincap/types.hpp"

namespace traincap {

/// Second-order description of the random channel: an m-antenna receive
/// vector with zero mean and covariance `c`.
class ChannelStats {
 public:
  /// Rejects covariances with an eigenvalue below -default_pd_tolerance.
  explicit ChannelStats(SymMatrixX c);

  const SymMatrixX& covariance() const { return c_; }
  Index antennas() const { return c_.dim(); }

 private:
  SymMatrixX c_;
};

/// Per-symbol power limit and coherence block length.
struct LinkBudget {
  LinkBudget(double power_in, int block_length_in);

  double power;      // linear scale, >= 0
  int block_length;  // symbols per coherence block, >= 2
};

/// Number of symbols in the block spent on pilots.
struct TrainingPlan {
  int t_tau = 0;
};

/// Covariance split induced by the MMSE estimator: the channel prior equals
/// estimate_cov + error_cov exactly, and noise_cov is the per-symbol
/// effective noise I + P * error_cov.
struct EstimatorStats {
  SymMatrixX estimate_cov;
  SymMatrixX error_cov;
  SymMatrixX noise_cov;
};

/// Received pilot measurements together with the (deterministic) pilot
/// amplitude; the training length is the number of measurements.
struct TrainingObservation {
  std::vector<VecX> y_list;
  double pilot_amplitude = 0.0;  // squared amplitude must equal the budget power
};

/// Covariance of the channel estimation error after plan.t_tau pilots.
/// Shrinks to zero with more training; tends to the prior as power vanishes.
SymMatrixX error_covariance(const ChannelStats& stats, const LinkBudget& budget,
                            const TrainingPlan& plan);

/// Covariance of the MMSE channel estimate; complements error_covariance so
/// the two sum to the prior covariance exactly.
SymMatrixX estimated_covariance(const ChannelStats& stats,
                                const LinkBudget& budget,
                                const TrainingPlan& plan);

/// Per-symbol effective noise covariance I + P * error_covariance, combining
/// thermal noise with self-interference from the estimation error.
SymMatrixX effective_noise(const ChannelStats& stats, const LinkBudget& budget,
                           const TrainingPlan& plan);

/// All three derived covariances from a single factorization.
EstimatorStats estimator_stats(const ChannelStats& stats,
                               const LinkBudget& budget,
                               const TrainingPlan& plan);

/// Linear MMSE estimate of the channel from pilot measurements: the prior
/// covariance shrinks the averaged observations toward zero.
VecX mmse_estimate(const ChannelStats& stats, const LinkBudget& budget,
                   const TrainingObservation& obs);

}  // namespace traincap
