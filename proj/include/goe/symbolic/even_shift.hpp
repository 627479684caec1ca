#pragma once

/**
 * The golden mean shift and the even shift as its factor.
 *
 * The cover has states s0, s1 and edges s0 -1-> s0, s0 -0-> s1, s1 -0-> s0.
 * Its vertex sequences avoid s1 s1, so they form the golden mean shift, and
 * reading edge labels is the 2-block code on vertices 00 ↦ 1, 01 ↦ 0,
 * 10 ↦ 0. The labels spell exactly the sequences with an even number of 0s
 * between any two 1s.
 */

#include <cstdint>
#include <vector>

#include "goe/symbolic/automata.hpp"
#include "goe/symbolic/code.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

inline SoficPresentation golden_mean_shift() { return sft_from_allowed_words(2, 2, {{0, 0}, {0, 1}, {1, 0}}); }

inline SoficPresentation even_shift_cover() {
  return SoficPresentation(2, {"s0", "s1"}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

/// Vertex word v₀v₁ ↦ label of the cover edge v₀ → v₁ (11 never occurs; sent to 0).
inline SlidingBlockCode even_label_code() { return SlidingBlockCode(2, 2, 0, 1, {1, 0, 0, 0}); }

/// Number of paths in p spelling w, from any start state.
inline std::uint64_t path_count(const SoficPresentation& p, const Word& w) {
  std::vector<std::uint64_t> cur(p.num_states(), 1);
  for (int x : w) {
    std::vector<std::uint64_t> nxt(p.num_states(), 0);
    for (const auto& e : p.edges())
      if (e.label == x) nxt[e.dst] += cur[e.src];
    cur = std::move(nxt);
  }
  std::uint64_t total = 0;
  for (auto c : cur) total += c;
  return total;
}

struct EvenShiftSystem {
  SoficPresentation cover;
  SlidingBlockCode label_code;
  SoficPresentation even;
  int checked_length = 0;     // preimage bound verified for words up to this length
  std::uint64_t max_preimages = 0;
};

/**
 * The cover, the label code and the even shift. Verifies that every even-shift
 * word up to `check_length` has one or two cover paths (preimage words) and
 * every other word none; throws std::logic_error otherwise.
 */
inline EvenShiftSystem even_shift_system(int check_length = 12) {
  EvenShiftSystem sys{even_shift_cover(), even_label_code(), even_shift_cover(), check_length, 0};
  const Dfa even = language_automaton(sys.even, 2);
  for (const auto& w : all_words(2, check_length)) {
    if (w.empty()) continue;
    const std::uint64_t c = path_count(sys.cover, w);
    const bool in_even = even.accepts(w);
    if (in_even && (c < 1 || c > 2)) throw std::logic_error("even-shift word with a preimage count outside [1, 2]");
    if (!in_even && c != 0) throw std::logic_error("word outside the even shift has a preimage");
    sys.max_preimages = std::max(sys.max_preimages, c);
  }
  return sys;
}

}  // namespace goe
