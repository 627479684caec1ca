#pragma once

/**
 * Surjectivity and pre-injectivity of sliding block codes on shifts
 * presented by labeled graphs.
 *
 * Both deciders work on the higher-block graph H of a code over a
 * presentation: a state (q, u) records a presentation state q and the last
 * L input symbols u, with L = max(window - 1, 1). Reading s along an edge
 * q -s-> q' moves to (q', u·s minus its first symbol) and emits the rule's
 * value on the last `window` symbols of u·s. Bi-infinite paths of H are
 * exactly the pairs (x, cover path of x), and the emitted labels spell τ(x).
 */

#include <cstddef>
#include <string>
#include <vector>

#include "goe/errors.hpp"
#include "goe/symbolic/automata.hpp"
#include "goe/symbolic/code.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

struct HigherBlockGraph {
  int history = 1;                // L
  std::vector<int> cover_state;   // q of each H state
  std::vector<int> history_code;  // u, base-k encoded
  SoficPresentation output;       // H with edges labeled by τ
};

inline HigherBlockGraph higher_block_graph(const SlidingBlockCode& code, const SoficPresentation& pres) {
  if (code.alphabet_in() != pres.alphabet_size())
    throw PreconditionError("code input alphabet differs from the presentation alphabet");
  const int k = code.alphabet_in();
  const int w = code.window();
  const int hist = std::max(w - 1, 1);
  std::size_t histories = 1;
  for (int i = 0; i < hist; ++i) {
    histories *= static_cast<std::size_t>(k);
    if (histories * pres.num_states() > (std::size_t{1} << 20)) throw ResourceError("higher-block graph too large");
  }
  const std::size_t n = pres.num_states() * histories;
  std::vector<std::string> names(n);
  std::vector<Edge> edges;
  Word buffer(static_cast<std::size_t>(hist) + 1);
  for (std::size_t q = 0; q < pres.num_states(); ++q)
    for (std::size_t u = 0; u < histories; ++u) {
      const int id = static_cast<int>(q * histories + u);
      const Word hw = SlidingBlockCode::window_of(u, hist, k);
      names[id] = pres.state_names()[q] + "|" + word_to_string(hw);
      for (int e : pres.out_edges(static_cast<int>(q))) {
        const Edge& edge = pres.edges()[e];
        std::copy(hw.begin(), hw.end(), buffer.begin());
        buffer.back() = edge.label;
        const int out = code.table()[code.window_index(buffer.data() + (hist + 1 - w))];
        const std::size_t next_u = (u * static_cast<std::size_t>(k) + static_cast<std::size_t>(edge.label)) % histories;
        edges.push_back({id, out, static_cast<int>(static_cast<std::size_t>(edge.dst) * histories + next_u)});
      }
    }
  SoficPresentation h(code.alphabet_out(), std::move(names), std::move(edges));
  HigherBlockGraph g{hist, {}, {}, h};
  for (int original : h.original_indices()) {
    g.cover_state.push_back(static_cast<int>(static_cast<std::size_t>(original) / histories));
    g.history_code.push_back(static_cast<int>(static_cast<std::size_t>(original) % histories));
  }
  return g;
}

/// Presentation of the image shift τ(X).
inline SoficPresentation image_presentation(const SlidingBlockCode& code, const SoficPresentation& pres) {
  return higher_block_graph(code, pres).output;
}

/// Whether τ maps the full shift onto itself: the image's factor language is every word.
inline bool surjective_on_full_shift(const SlidingBlockCode& code, std::size_t cap = kDefaultSubsetCap) {
  if (code.alphabet_in() != code.alphabet_out()) throw PreconditionError("surjectivity onto the full shift needs equal alphabets");
  const Dfa d = determinize(image_presentation(code, full_shift(code.alphabet_in())), code.alphabet_out(), cap);
  for (bool acc : d.accepting)
    if (!acc) return false;
  return true;
}

/// τ(X) ⊆ X, decided by inclusion of factor languages.
inline bool preserves_shift(const SlidingBlockCode& code, const SoficPresentation& pres) {
  if (code.alphabet_out() != pres.alphabet_size()) return false;
  return language_included(image_presentation(code, pres), pres);
}

/// τ(X) = X for a code preserving X.
inline bool surjective_onto(const SlidingBlockCode& code, const SoficPresentation& pres) {
  return language_equal(image_presentation(code, pres), pres);
}

/**
 * Pre-injectivity of τ on the shift presented by `pres`.
 *
 * On the pair graph of H (pairs of H states, edges pairing H edges with equal
 * outputs), call a pair diagonal when both histories agree. Two distinct
 * almost-equal configurations with equal images are a bi-infinite pair path
 * that is diagonal near both ends and off-diagonal somewhere. So τ fails to
 * be pre-injective exactly when some off-diagonal pair is reachable from a
 * diagonal state with an infinite diagonal past and reaches a diagonal state
 * with an infinite diagonal future.
 */
inline bool pre_injective_code(const SlidingBlockCode& code, const SoficPresentation& pres, bool check_preserves = true) {
  if (check_preserves && !preserves_shift(code, pres)) throw PreconditionError("code does not map the shift into itself");
  const HigherBlockGraph g = higher_block_graph(code, pres);
  const SoficPresentation& h = g.output;
  const std::size_t m = h.num_states();
  const std::size_t n = m * m;
  auto pair_id = [m](std::size_t i, std::size_t j) { return i * m + j; };
  std::vector<bool> diagonal(n, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) diagonal[pair_id(i, j)] = g.history_code[i] == g.history_code[j];

  std::vector<Edge> pair_edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (int e1 : h.out_edges(static_cast<int>(i)))
        for (int e2 : h.out_edges(static_cast<int>(j))) {
          const Edge& a = h.edges()[e1];
          const Edge& b = h.edges()[e2];
          if (a.label != b.label) continue;
          pair_edges.push_back({static_cast<int>(pair_id(i, j)), 0,
                                static_cast<int>(pair_id(static_cast<std::size_t>(a.dst), static_cast<std::size_t>(b.dst)))});
        }

  std::vector<Edge> diag_edges;
  for (const auto& e : pair_edges)
    if (diagonal[e.src] && diagonal[e.dst]) diag_edges.push_back(e);
  const std::vector<bool> infinite_past = detail::prune(n, diag_edges, true, false, diagonal);
  const std::vector<bool> infinite_future = detail::prune(n, diag_edges, false, true, diagonal);

  std::vector<std::vector<int>> succ(n), pred(n);
  for (const auto& e : pair_edges) {
    succ[e.src].push_back(e.dst);
    pred[e.dst].push_back(e.src);
  }
  auto closure = [n](const std::vector<bool>& seeds, const std::vector<std::vector<int>>& g2) {
    std::vector<bool> seen = seeds;
    std::vector<int> stack;
    for (std::size_t v = 0; v < n; ++v)
      if (seeds[v]) stack.push_back(static_cast<int>(v));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g2[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return seen;
  };
  const std::vector<bool> from_past = closure(infinite_past, succ);
  const std::vector<bool> to_future = closure(infinite_future, pred);
  for (std::size_t v = 0; v < n; ++v)
    if (!diagonal[v] && from_past[v] && to_future[v]) return false;
  return true;
}

}  // namespace goe
