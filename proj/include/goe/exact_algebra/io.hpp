#pragma once

// Text and JSON formats for exact matrices and polynomials.

#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "goe/errors.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/polynomial.hpp"

namespace goe {

namespace detail {

/// Non-empty lines with '#' comments stripped, split into whitespace tokens.
inline std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

inline IntegerMatrix matrix_from_lines(const std::vector<std::vector<std::string>>& lines, std::size_t& cursor) {
  if (cursor >= lines.size() || lines[cursor].size() != 1) throw ParseError("expected a line holding the dimension n");
  const Integer n_big = parse_integer(lines[cursor][0]);
  if (n_big < 1 || n_big > 64) throw ParseError("matrix dimension must be between 1 and 64");
  const auto n = n_big.convert_to<std::size_t>();
  ++cursor;
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i, ++cursor) {
    if (cursor >= lines.size()) throw ParseError("matrix has fewer than n rows");
    if (lines[cursor].size() != n) throw ParseError("matrix row " + std::to_string(i + 1) + " does not have n entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_integer(lines[cursor][j]);
  }
  return m;
}

}  // namespace detail

/// "n" on the first line, then n lines of n whitespace-separated integers.
inline IntegerMatrix parse_matrix(std::istream& in) {
  const auto lines = detail::tokenized_lines(in);
  std::size_t cursor = 0;
  IntegerMatrix m = detail::matrix_from_lines(lines, cursor);
  if (cursor != lines.size()) throw ParseError("trailing content after matrix");
  return m;
}

inline IntegerMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline std::string format_matrix(const IntegerMatrix& m) {
  std::ostringstream os;
  os << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as strings.
inline nlohmann::json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return z.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer");
}

inline nlohmann::json matrix_to_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

/// Coefficient list in ascending degree.
inline nlohmann::json polynomial_to_json(const IntegerPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(integer_to_json(c));
  return arr;
}

inline IntegerPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of coefficients");
  std::vector<Integer> c;
  for (const auto& v : j) c.push_back(integer_from_json(v));
  return IntegerPolynomial(std::move(c));
}

}  // namespace goe
