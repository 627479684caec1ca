#pragma once

#include <json.hpp>

#include "goe/exact_algebra/io.hpp"
#include "goe/homoclinic/points.hpp"
#include "goe/homoclinic/splitting.hpp"

namespace goe {

inline nlohmann::json real_vector_to_json(const RealVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.convert_to<double>());
  return arr;
}

inline nlohmann::json integer_vector_to_json(const IntegerVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

/// One line of a sample dump: {"k": [...], "point": [...]}.
inline nlohmann::json to_json(const HomoclinicSample& s) {
  return {{"k", integer_vector_to_json(s.k)}, {"point", real_vector_to_json(s.point)}};
}

inline nlohmann::json coverage_to_json(std::int64_t max_k, std::int64_t grid, double coverage) {
  return {{"K", max_k}, {"grid", grid}, {"coverage", coverage}};
}

inline nlohmann::json real_matrix_to_json(const RealMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).convert_to<double>());
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const SpectralSplit& s) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : s.roots) {
    const char* side = r.side == DiskSide::Inside ? "inside" : r.side == DiskSide::On ? "on" : "outside";
    roots.push_back({{"re", r.value.real().convert_to<double>()},
                     {"im", r.value.imag().convert_to<double>()},
                     {"multiplicity", r.multiplicity},
                     {"side", side}});
  }
  return {{"P_s", real_matrix_to_json(s.p_s)},
          {"P_u", real_matrix_to_json(s.p_u)},
          {"contraction_rate", s.contraction_rate.convert_to<double>()},
          {"residual", s.residual.convert_to<double>()},
          {"roots", roots}};
}

inline nlohmann::json to_json(const DecayCheck& d) {
  return {{"holds", d.holds},
          {"C", d.constant.convert_to<double>()},
          {"kappa", d.kappa.convert_to<double>()},
          {"lambda", d.rate.convert_to<double>()},
          {"worst_step", d.worst_step},
          {"worst_slack", d.worst_slack.convert_to<double>()}};
}

}  // namespace goe
