// SPDX-License-Identifier: Apache-2.0
#include "traincap/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traincap/errors.hpp"

namespace traincap {

namespace {

MatX rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw ParseError("no matrix rows found");
  }
  const std::size_t cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols));
    }
  }
  MatX a(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  return a;
}

}  // namespace

MatX parse_matrix_text(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_start = 0;
  int line_number = 0;
  while (line_start <= text.size()) {
    const std::size_t line_end = text.find('\n', line_start);
    const std::size_t stop =
        line_end == std::string::npos ? text.size() : line_end;
    ++line_number;

    std::vector<double> row;
    std::size_t pos = line_start;
    while (pos < stop) {
      const char ch = text[pos];
      if (ch == '#') {
        break;
      }
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++pos;
        continue;
      }
      double value = 0.0;
      const auto [next, ec] =
          std::from_chars(text.data() + pos, text.data() + stop, value);
      if (ec != std::errc()) {
        const int column = static_cast<int>(pos - line_start) + 1;
        throw ParseError("invalid number", line_number, column);
      }
      row.push_back(value);
      pos = static_cast<std::size_t>(next - text.data());
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
    if (line_end == std::string::npos) {
      break;
    }
    line_start = line_end + 1;
  }
  return rows_to_matrix(rows);
}

MatX parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) {
      throw ParseError("JSON object is missing the \"matrix\" field");
    }
    entries = &doc.at("matrix");
  }
  if (!entries->is_array()) {
    throw ParseError("\"matrix\" must be an array of row arrays");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : *entries) {
    if (!row.is_array()) {
      throw ParseError("\"matrix\" must be an array of row arrays");
    }
    std::vector<double> values;
    for (const auto& entry : row) {
      if (!entry.is_number()) {
        throw ParseError("matrix entries must be numbers");
      }
      values.push_back(entry.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return rows_to_matrix(rows);
}

ChannelStats load_covariance(const std::string& path, SpdCheckReportX* check) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  const bool looks_like_json =
      first < text.size() && (text[first] == '{' || text[first] == '[');
  const MatX a =
      looks_like_json ? parse_matrix_json(text) : parse_matrix_text(text);

  SymMatrixX sym(a);
  if (check != nullptr) {
    *check = check_spd(sym);
  }
  return ChannelStats(std::move(sym));
}

}  // namespace traincap
