#pragma once

#include <istream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "goe/exact_algebra/io.hpp"
#include "goe/toral/affine_map.hpp"
#include "goe/toral/classification.hpp"
#include "goe/toral/endomorphism.hpp"

namespace goe {

/// Matrix block, then one line of n rationals "p/q". A missing line means c = 0.
inline AffineToralMap parse_affine_map(std::istream& in) {
  const auto lines = detail::tokenized_lines(in);
  std::size_t cursor = 0;
  IntegerMatrix b = detail::matrix_from_lines(lines, cursor);
  RationalVector c(b.size(), Rational(0));
  if (cursor < lines.size()) {
    if (lines[cursor].size() != b.size()) throw ParseError("translation line must hold n rationals");
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = parse_rational(lines[cursor][i]);
    ++cursor;
  }
  if (cursor != lines.size()) throw ParseError("trailing content after affine map");
  return AffineToralMap(std::move(b), std::move(c));
}

inline AffineToralMap parse_affine_map(const std::string& text) {
  std::istringstream in(text);
  return parse_affine_map(in);
}

inline nlohmann::json rational_vector_to_json(const RationalVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline nlohmann::json to_json(const MatrixClassification& c) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : c.factors)
    factors.push_back({{"factor", polynomial_to_json(f.factor)}, {"multiplicity", f.multiplicity}});
  return {{"det", integer_to_json(c.det)},
          {"invertible_over_Z", c.is_invertible_over_Z},
          {"hyperbolic", c.is_hyperbolic},
          {"ergodic", c.is_ergodic},
          {"unit_circle_roots", c.unit_circle_roots},
          {"unity_divisors", c.unity_divisors},
          {"char_poly", polynomial_to_json(c.char_poly)},
          {"char_poly_text", to_string(c.char_poly)},
          {"irreducible", c.char_poly_irreducible()},
          {"factors", factors}};
}

inline nlohmann::json to_json(const AffineToralMap& tau) {
  return {{"B", matrix_to_json(tau.linear())}, {"c", rational_vector_to_json(tau.translation())}};
}

inline nlohmann::json to_json(const GoeVerdict& v) {
  nlohmann::json pre = v.pre_injective == Tristate::Unknown ? nlohmann::json("unknown")
                                                            : nlohmann::json(v.pre_injective == Tristate::True);
  nlohmann::json kernel = v.kernel_cardinality ? integer_to_json(*v.kernel_cardinality) : nlohmann::json("infinite");
  return {{"surjective", v.surjective},
          {"injective", v.injective},
          {"pre_injective", pre},
          {"kernel", kernel},
          {"moore_consistent", v.moore_consistent},
          {"myhill_consistent", v.myhill_consistent}};
}

}  // namespace goe
