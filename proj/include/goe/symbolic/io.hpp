#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "goe/errors.hpp"
#include "goe/symbolic/census.hpp"
#include "goe/symbolic/code.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

/// {"states": [...], "edges": [[src, label, dst], ...], "alphabet": k}; states may be named by strings or numbers.
inline SoficPresentation presentation_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("states") || !j.contains("edges"))
      throw ParseError("presentation needs 'states' and 'edges'");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    auto key = [](const nlohmann::json& v) {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_integer()) return std::to_string(v.get<long long>());
      throw ParseError("state names must be strings or integers");
    };
    for (const auto& s : j.at("states")) {
      const std::string name = key(s);
      if (!index.emplace(name, static_cast<int>(names.size())).second) throw ParseError("duplicate state '" + name + "'");
      names.push_back(name);
    }
    std::vector<Edge> edges;
    int max_label = -1;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("edges must be [src, label, dst] triples");
      const auto src = index.find(key(e[0]));
      const auto dst = index.find(key(e[2]));
      if (src == index.end() || dst == index.end()) throw ParseError("edge refers to an undeclared state");
      if (!e[1].is_number_integer() || e[1].get<int>() < 0) throw ParseError("edge labels must be nonnegative integers");
      edges.push_back({src->second, e[1].get<int>(), dst->second});
      max_label = std::max(max_label, e[1].get<int>());
    }
    const int alphabet = j.contains("alphabet") ? j.at("alphabet").get<int>() : std::max(max_label + 1, 1);
    if (max_label >= alphabet) throw ParseError("edge label outside the declared alphabet");
    return SoficPresentation(alphabet, std::move(names), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation: ") + e.what());
  }
}

inline nlohmann::json presentation_to_json(const SoficPresentation& p) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : p.edges())
    edges.push_back({p.state_names()[e.src], e.label, p.state_names()[e.dst]});
  return {{"alphabet", p.alphabet_size()}, {"states", p.state_names()}, {"edges", edges}};
}

/// {"m": .., "a": .., "table": {"window": symbol, ...}}; windows are digit strings.
inline SlidingBlockCode code_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("a") || !j.contains("table"))
      throw ParseError("code needs 'm', 'a' and 'table'");
    const int m = j.at("m").get<int>(), a = j.at("a").get<int>();
    const int k_in = j.value("alphabet_in", 2), k_out = j.value("alphabet_out", k_in);
    if (m < 0 || a < 0) throw ParseError("memory and anticipation must be nonnegative");
    if (k_in < 1 || k_in > 10 || k_out < 1 || k_out > 10) throw ParseError("alphabets must have 1 to 10 symbols");
    const int w = m + 1 + a;
    if (w > 20) throw ParseError("window too long");
    std::size_t size = 1;
    for (int i = 0; i < w; ++i) size *= static_cast<std::size_t>(k_in);
    std::vector<int> table(size, -1);
    for (const auto& [window, value] : j.at("table").items()) {
      const Word word = word_from_string(window);
      if (static_cast<int>(word.size()) != w) throw ParseError("window '" + window + "' has the wrong length");
      for (int s : word)
        if (s >= k_in) throw ParseError("window '" + window + "' uses a symbol outside the input alphabet");
      if (!value.is_number_integer()) throw ParseError("table values must be integers");
      std::size_t idx = 0;
      for (int s : word) idx = idx * static_cast<std::size_t>(k_in) + static_cast<std::size_t>(s);
      table[idx] = value.get<int>();
    }
    for (int v : table)
      if (v < 0) throw ParseError("rule table is not total");
    for (int v : table)
      if (v >= k_out) throw ParseError("rule output outside the output alphabet");
    return SlidingBlockCode(k_in, k_out, m, a, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed code: ") + e.what());
  }
}

inline nlohmann::json code_to_json(const SlidingBlockCode& c) {
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t i = 0; i < c.table().size(); ++i)
    table[word_to_string(SlidingBlockCode::window_of(i, c.window(), c.alphabet_in()))] = c.table()[i];
  return {{"m", c.memory()},
          {"a", c.anticipation()},
          {"alphabet_in", c.alphabet_in()},
          {"alphabet_out", c.alphabet_out()},
          {"table", table}};
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "rule,surjective,pre_injective\n";
  for (const auto& r : rows) os << r.rule << ',' << (r.surjective ? "true" : "false") << ','
                                << (r.pre_injective ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace goe
