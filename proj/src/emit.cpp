// SPDX-License-Identifier: Apache-2.0
#include "traincap/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traincap/errors.hpp"

namespace traincap {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

nlohmann::json matrix_rows(const MatX& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < a.cols(); ++j) {
      row.push_back(a(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string curve_to_csv(const CapacityCurve& curve) {
  if (curve.entries.empty()) {
    throw InvalidConfigError("cannot serialize an empty capacity curve");
  }
  const double block_length =
      static_cast<double>(curve.entries.back().t_tau);
  std::string out = "t_tau,bits_per_block,bits_per_symbol\n";
  for (const CurvePoint& point : curve.entries) {
    out += std::to_string(point.t_tau);
    out += ',';
    out += format_double(point.bits_per_block);
    out += ',';
    out += format_double(point.bits_per_block / block_length);
    out += '\n';
  }
  out += "# argmax=" + std::to_string(curve.argmax_t_tau) +
         " max_bits_per_block=" + format_double(curve.max_bits) + "\n";
  return out;
}

std::string curve_to_json(const CapacityCurve& curve) {
  if (curve.entries.empty()) {
    throw InvalidConfigError("cannot serialize an empty capacity curve");
  }
  const double block_length =
      static_cast<double>(curve.entries.back().t_tau);
  nlohmann::json entries = nlohmann::json::array();
  for (const CurvePoint& point : curve.entries) {
    entries.push_back({{"t_tau", point.t_tau},
                       {"bits_per_block", point.bits_per_block},
                       {"bits_per_symbol", point.bits_per_block / block_length}});
  }
  nlohmann::json doc;
  doc["entries"] = std::move(entries);
  doc["argmax_t_tau"] = curve.argmax_t_tau;
  doc["max_bits_per_block"] = curve.max_bits;
  return doc.dump(2) + "\n";
}

std::string sim_report_to_json(const SimReport& report) {
  nlohmann::json doc;
  doc["empirical_c_hat"] = matrix_rows(report.empirical_c_hat);
  doc["empirical_c_tilde"] = matrix_rows(report.empirical_c_tilde);
  doc["cross_cov"] = matrix_rows(report.cross_cov);
  doc["frobenius_rel_err_c_tilde"] = report.frobenius_rel_err_c_tilde;
  doc["num_trials"] = report.num_trials;
  doc["seed"] = report.seed;
  return doc.dump(2) + "\n";
}

std::string curve_to_svg(const CapacityCurve& curve) {
  if (curve.entries.empty()) {
    throw InvalidConfigError("cannot render an empty capacity curve");
  }
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 420.0;
  constexpr double kMargin = 56.0;
  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;

  double x_min = curve.entries.front().t_tau;
  double x_max = curve.entries.back().t_tau;
  double y_min = 0.0;
  double y_max = curve.max_bits;
  for (const CurvePoint& point : curve.entries) {
    if (std::isfinite(point.bits_per_block)) {
      y_min = std::min(y_min, point.bits_per_block);
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;

  const auto to_x = [&](double t) {
    return kMargin + (t - x_min) / (x_max - x_min) * plot_w;
  };
  const auto to_y = [&](double bits) {
    return kHeight - kMargin - (bits - y_min) / (y_max - y_min) * plot_h;
  };

  std::string points;
  for (const CurvePoint& point : curve.entries) {
    if (!std::isfinite(point.bits_per_block)) continue;
    if (!points.empty()) points += ' ';
    points += format_double(to_x(point.t_tau));
    points += ',';
    points += format_double(to_y(point.bits_per_block));
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"420\" viewBox=\"0 0 640 420\">\n";
  svg += "  <rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
  svg += "  <rect x=\"" + format_double(kMargin) + "\" y=\"" +
         format_double(kMargin) + "\" width=\"" + format_double(plot_w) +
         "\" height=\"" + format_double(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  // Four ticks per axis with value labels.
  for (int k = 0; k <= 3; ++k) {
    const double fx = x_min + (x_max - x_min) * k / 3.0;
    const double fy = y_min + (y_max - y_min) * k / 3.0;
    svg += "  <line x1=\"" + format_double(to_x(fx)) + "\" y1=\"" +
           format_double(kHeight - kMargin) + "\" x2=\"" +
           format_double(to_x(fx)) + "\" y2=\"" +
           format_double(kHeight - kMargin + 6.0) + "\" stroke=\"black\"/>\n";
    svg += "  <text x=\"" + format_double(to_x(fx)) + "\" y=\"" +
           format_double(kHeight - kMargin + 20.0) +
           "\" font-size=\"11\" text-anchor=\"middle\">" +
           format_double(std::round(fx)) + "</text>\n";
    svg += "  <line x1=\"" + format_double(kMargin - 6.0) + "\" y1=\"" +
           format_double(to_y(fy)) + "\" x2=\"" + format_double(kMargin) +
           "\" y2=\"" + format_double(to_y(fy)) + "\" stroke=\"black\"/>\n";
    svg += "  <text x=\"" + format_double(kMargin - 10.0) + "\" y=\"" +
           format_double(to_y(fy) + 4.0) +
           "\" font-size=\"11\" text-anchor=\"end\">" + format_double(fy) +
           "</text>\n";
  }

  svg += "  <text x=\"320\" y=\"408\" font-size=\"13\" "
         "text-anchor=\"middle\">training symbols</text>\n";
  svg += "  <text x=\"16\" y=\"210\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 210)\">bits per block</text>\n";
  svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
         "points=\"" + points + "\"/>\n";

  // Mark the maximizer.
  for (const CurvePoint& point : curve.entries) {
    if (point.t_tau == curve.argmax_t_tau) {
      svg += "  <circle cx=\"" + format_double(to_x(point.t_tau)) +
             "\" cy=\"" + format_double(to_y(point.bits_per_block)) +
             "\" r=\"3.5\" fill=\"#d62728\"/>\n";
      break;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace traincap
