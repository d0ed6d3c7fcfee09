// SPDX-License-Identifier: Apache-2.0
#include "traincap/optimizer.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "traincap/errors.hpp"

namespace traincap {
namespace {

constexpr double kTieTolerance = 1e-12;

// Smallest t_tau whose value lies within the tie tolerance of the maximum.
int leading_argmax(const std::vector<CurvePoint>& entries, double max_bits) {
  const double threshold = max_bits - kTieTolerance * std::abs(max_bits);
  for (const CurvePoint& p : entries) {
    if (p.bits_per_block >= threshold) return p.t_tau;
  }
  return entries.front().t_tau;
}

CapacityCurve sweep_objective(
    int block_length, const std::function<double(TrainingPlan)>& objective) {
  CapacityCurve curve;
  curve.entries.reserve(block_length);
  for (int t = 1; t <= block_length; ++t) {
    curve.entries.push_back({t, objective(TrainingPlan{t})});
  }
  curve.max_bits = curve.entries.front().bits_per_block;
  for (const CurvePoint& p : curve.entries) {
    if (p.bits_per_block > curve.max_bits) curve.max_bits = p.bits_per_block;
  }
  curve.argmax_t_tau = leading_argmax(curve.entries, curve.max_bits);
  return curve;
}

}  // namespace

CapacityCurve sweep(const ChannelStats& stats, const LinkBudget& budget) {
  return sweep_objective(budget.block_length, [&](TrainingPlan plan) {
    return capacity(stats, budget, plan).bits_per_block;
  });
}

AsymptoticReport asymptotic_report(const ChannelStats& stats,
                                   const LinkBudget& budget) {
  const CapacityCurve exact = sweep(stats, budget);
  const CapacityCurve approx =
      sweep_objective(budget.block_length, [&](TrainingPlan plan) {
        return capacity_high_power_approx(stats, budget, plan);
      });
  return {exact.argmax_t_tau, approx.argmax_t_tau,
          exact.argmax_t_tau == approx.argmax_t_tau};
}

std::vector<PowerArgmax> argmax_trend(const ChannelStats& stats,
                                      const LinkBudget& budget,
                                      std::span<const double> powers) {
  if (powers.empty()) {
    throw InvalidConfigError("argmax_trend: power list is empty");
  }
  double previous = 0.0;
  for (double p : powers) {
    if (!(p > previous)) {
      throw InvalidConfigError(
          "argmax_trend: powers must be positive and strictly ascending");
    }
    previous = p;
  }
  std::vector<PowerArgmax> trend;
  trend.reserve(powers.size());
  for (double p : powers) {
    const LinkBudget at_power(p, budget.block_length);
    trend.push_back({p, sweep(stats, at_power).argmax_t_tau});
  }
  return trend;
}

}  // namespace traincap
