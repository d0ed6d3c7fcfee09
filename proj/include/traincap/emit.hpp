// SPDX-License-Identifier: Apache-2.0
//
// Serialization of sweep curves and simulation reports.
//
//   * CSV: header `t_tau,bits_per_block,bits_per_symbol`, one row per
//     training length, LF line endings, 12 significant digits, and a trailing
//     `# argmax=` comment with the winning training length. Per-symbol values
//     divide by the block length, which the curve covers exactly.
//   * JSON: SimReport fields with matrices as row-major arrays of row arrays.
//   * SVG: a self-contained plot of bits per block against training length.
#pragma once

#include <string>

#include "traincap/montecarlo.hpp"
#include "traincap/optimizer.hpp"

namespace traincap {

std::string curve_to_csv(const CapacityCurve& curve);

std::string curve_to_json(const CapacityCurve& curve);

std::string sim_report_to_json(const SimReport& report);

std::string curve_to_svg(const CapacityCurve& curve);

}  // namespace traincap
