// SPDX-License-Identifier: Apache-2.0
//
// Integer search for the capacity-maximizing training length. The curve is
// not assumed unimodal; every candidate in [1, T] is evaluated.
#pragma once

#include <span>
#include <vector>

#include "traincap/capacity.hpp"
#include "traincap/estimation.hpp"

namespace traincap {

struct CurvePoint {
  int t_tau = 0;
  double bits_per_block = 0.0;
};

/// Capacity at every integer training length in [1, T], ascending, plus the
/// maximizing entry. Ties within 1e-12 of the maximum resolve to the
/// smallest training length.
struct CapacityCurve {
  std::vector<CurvePoint> entries;
  int argmax_t_tau = 0;
  double max_bits = 0.0;
};

struct AsymptoticReport {
  int argmax_exact = 0;
  int argmax_high_p_approx = 0;
  bool high_p_agreement = false;
};

struct PowerArgmax {
  double power = 0.0;
  int argmax_t_tau = 0;
};

/// Exhaustive capacity evaluation over t_tau in [1, T].
CapacityCurve sweep(const ChannelStats& stats, const LinkBudget& budget);

/// Compares the exact argmax against the argmax of the high-power
/// approximation, both found by exhaustive search.
AsymptoticReport asymptotic_report(const ChannelStats& stats,
                                   const LinkBudget& budget);

/// One sweep per power level; powers must be positive and strictly
/// ascending.
std::vector<PowerArgmax> argmax_trend(const ChannelStats& stats,
                                      const LinkBudget& budget,
                                      std::span<const double> powers);

}  // namespace traincap
