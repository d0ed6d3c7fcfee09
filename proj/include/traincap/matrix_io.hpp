// SPDX-License-Identifier: Apache-2.0
//
// Loading covariance matrices from disk. Two formats are auto-detected:
//
//   * whitespace text: one matrix row per line, entries separated by spaces
//     or tabs, `#` starts a comment, blank lines ignored;
//   * JSON: an object {"matrix": [[...], ...]} of row arrays.
//
// A file whose first non-whitespace byte is `{` or `[` is treated as JSON.
// Parsed matrices are validated as symmetric PSD before being returned.
#pragma once

#include <string>

#include "traincap/estimation.hpp"
#include "traincap/spd.hpp"

namespace traincap {

/// Parses matrix text in the whitespace format. Throws ParseError with
/// 1-based line/column on malformed numbers or ragged rows.
MatX parse_matrix_text(const std::string& text);

/// Parses the JSON object format. Throws ParseError on malformed JSON or a
/// missing/ragged "matrix" field.
MatX parse_matrix_json(const std::string& text);

/// Reads `path`, auto-detects the format, and validates the result as a
/// symmetric PSD covariance. Throws ParseError on I/O or syntax problems and
/// InvalidMatrixError subclasses on structural ones. When `check` is non-null
/// it receives the eigenvalue report so callers can warn about
/// near-singular inputs.
ChannelStats load_covariance(const std::string& path,
                             SpdCheckReportX* check = nullptr);

}  // namespace traincap
