#pragma once

/**
 * Factor languages of presentations as deterministic automata.
 *
 * Every state of a trimmed presentation can start and end a word, so the
 * subset construction starts from the set of all states and accepts every
 * nonempty subset. The empty subset is the dead state. Factor languages are
 * compared through minimal automata in a canonical BFS numbering.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 16;

struct Dfa {
  int alphabet = 0;
  int start = 0;
  std::vector<std::vector<int>> next;  // next[state][symbol]
  std::vector<bool> accepting;

  std::size_t size() const { return next.size(); }

  bool accepts(const Word& w) const {
    int s = start;
    for (int x : w) {
      if (x < 0 || x >= alphabet) return false;
      s = next[s][x];
    }
    return accepting[s];
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

inline Dfa determinize(const SoficPresentation& p, int alphabet, std::size_t cap = kDefaultSubsetCap) {
  const std::size_t n = p.num_states();
  const std::size_t words = (n + 63) / 64;
  using Subset = std::vector<std::uint64_t>;
  std::map<Subset, int> index;
  std::vector<Subset> subsets;
  Dfa d;
  d.alphabet = alphabet;
  auto intern = [&](Subset s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= cap) throw ResourceError("subset construction exceeded its state cap");
      bool nonempty = false;
      for (auto w : s) nonempty = nonempty || w != 0;
      subsets.push_back(std::move(s));
      d.accepting.push_back(nonempty);
    }
    return it->second;
  };
  Subset all(words, 0);
  for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  d.start = intern(all);
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    std::vector<Subset> succ(static_cast<std::size_t>(alphabet), Subset(words, 0));
    for (std::size_t v = 0; v < n; ++v) {
      if (!(subsets[cur][v / 64] >> (v % 64) & 1U)) continue;
      for (int e : p.out_edges(static_cast<int>(v))) {
        const Edge& edge = p.edges()[e];
        if (edge.label < alphabet) succ[edge.label][edge.dst / 64] |= std::uint64_t{1} << (edge.dst % 64);
      }
    }
    std::vector<int> row;
    for (auto& s : succ) row.push_back(intern(std::move(s)));
    d.next.push_back(std::move(row));
  }
  return d;
}

/// Minimal automaton, states renumbered in BFS order from the start state.
inline Dfa minimize(const Dfa& d) {
  const std::size_t n = d.size();
  std::vector<int> cls(n);
  for (std::size_t s = 0; s < n; ++s) cls[s] = d.accepting[s] ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> sig{cls[s]};
      for (int x = 0; x < d.alphabet; ++x) sig.push_back(cls[d.next[s][x]]);
      refined[s] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size())).first->second;
    }
    cls = std::move(refined);
    if (sig_index.size() == classes) break;
    classes = sig_index.size();
  }
  std::vector<int> order(classes, -1);
  std::vector<std::size_t> rep(classes);
  for (std::size_t s = 0; s < n; ++s) rep[cls[s]] = s;
  Dfa m;
  m.alphabet = d.alphabet;
  m.start = 0;
  std::vector<int> queue{cls[d.start]};
  order[cls[d.start]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t s = rep[queue[i]];
    std::vector<int> row;
    for (int x = 0; x < d.alphabet; ++x) {
      const int c = cls[d.next[s][x]];
      if (order[c] < 0) {
        order[c] = static_cast<int>(queue.size());
        queue.push_back(c);
      }
      row.push_back(order[c]);
    }
    m.next.push_back(std::move(row));
    m.accepting.push_back(d.accepting[s]);
  }
  return m;
}

inline Dfa language_automaton(const SoficPresentation& p, int alphabet, std::size_t cap = kDefaultSubsetCap) {
  return minimize(determinize(p, alphabet, cap));
}

/// Every word of length ≤ max_len over the alphabet, shortlex order.
inline std::vector<Word> all_words(int alphabet, int max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (int x = 0; x < alphabet; ++x) {
      Word w = out[i];
      w.push_back(x);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/**
 * Equality of factor languages, decided on minimal automata. When
 * spot_check_len > 0 the verdict is replayed on every word up to that length;
 * a mismatch there is an internal error.
 */
inline bool language_equal(const SoficPresentation& p1, const SoficPresentation& p2, int spot_check_len = 0) {
  const int k = std::max(p1.alphabet_size(), p2.alphabet_size());
  const Dfa d1 = language_automaton(p1, k), d2 = language_automaton(p2, k);
  const bool equal = d1 == d2;
  if (spot_check_len > 0) {
    bool words_agree = true;
    for (const auto& w : all_words(k, spot_check_len)) words_agree = words_agree && d1.accepts(w) == d2.accepts(w);
    if (equal && !words_agree) throw std::logic_error("equal minimal automata disagree on a word");
  }
  return equal;
}

/// Factor language of p1 contained in that of p2.
inline bool language_included(const SoficPresentation& p1, const SoficPresentation& p2) {
  const int k = std::max(p1.alphabet_size(), p2.alphabet_size());
  const Dfa d1 = language_automaton(p1, k), d2 = language_automaton(p2, k);
  std::map<std::pair<int, int>, bool> seen;
  std::vector<std::pair<int, int>> queue{{d1.start, d2.start}};
  seen[queue.front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    if (d1.accepting[a] && !d2.accepting[b]) return false;
    for (int x = 0; x < k; ++x) {
      const std::pair<int, int> nxt{d1.next[a][x], d2.next[b][x]};
      if (seen.emplace(nxt, true).second) queue.push_back(nxt);
    }
  }
  return true;
}

inline bool in_language(const SoficPresentation& p, const Word& w) {
  std::vector<bool> cur(p.num_states(), true);
  for (int x : w) {
    std::vector<bool> nxt(p.num_states(), false);
    bool any = false;
    for (const auto& e : p.edges())
      if (cur[e.src] && e.label == x) nxt[e.dst] = any = true;
    if (!any) return false;
    cur = std::move(nxt);
  }
  return true;
}

}  // namespace goe
