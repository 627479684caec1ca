#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goe/symbolic/automata.hpp"
#include "goe/symbolic/code.hpp"
#include "goe/symbolic/deciders.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

struct CensusRow {
  unsigned rule = 0;
  bool surjective = false;
  bool pre_injective = false;
};

/// Surjectivity and pre-injectivity on the full 2-shift for all 256 elementary rules.
inline std::vector<CensusRow> elementary_census() {
  const SoficPresentation full = full_shift(2);
  std::vector<CensusRow> rows;
  for (unsigned r = 0; r < 256; ++r) {
    const SlidingBlockCode code = elementary_rule(r);
    rows.push_back({r, surjective_on_full_shift(code), pre_injective_code(code, full, false)});
  }
  return rows;
}

/**
 * Brute-force image test: does every word of length ≤ max_len have a
 * preimage? Applies the code to every input word of length len + m + a.
 */
inline bool every_short_word_has_preimage(const SlidingBlockCode& code, int max_len) {
  const int k = code.alphabet_in();
  const int extra = code.memory() + code.anticipation();
  for (int len = 1; len <= max_len; ++len) {
    std::size_t outputs = 1, inputs = 1;
    for (int i = 0; i < len; ++i) outputs *= static_cast<std::size_t>(code.alphabet_out());
    for (int i = 0; i < len + extra; ++i) inputs *= static_cast<std::size_t>(k);
    std::vector<bool> hit(outputs, false);
    std::size_t count = 0;
    for (std::size_t i = 0; i < inputs && count < outputs; ++i) {
      const Word out = apply_code(code, SlidingBlockCode::window_of(i, len + extra, k));
      std::size_t idx = 0;
      for (int x : out) idx = idx * static_cast<std::size_t>(code.alphabet_out()) + static_cast<std::size_t>(x);
      if (!hit[idx]) {
        hit[idx] = true;
        ++count;
      }
    }
    if (count < outputs) return false;
  }
  return true;
}

/**
 * Balanced preimage counts on the full shift: every output word of length
 * ≤ max_len has exactly k_in^(m+a) preimages of length len + m + a. For
 * k_in == k_out this is equivalent to surjectivity once max_len is large
 * enough; an unbalanced count at any length proves non-surjectivity.
 */
inline bool balanced_preimage_counts(const SlidingBlockCode& code, int max_len) {
  const int k = code.alphabet_in();
  const int extra = code.memory() + code.anticipation();
  std::size_t expected = 1;
  for (int i = 0; i < extra; ++i) expected *= static_cast<std::size_t>(k);
  for (int len = 1; len <= max_len; ++len) {
    std::size_t outputs = 1, inputs = 1;
    for (int i = 0; i < len; ++i) outputs *= static_cast<std::size_t>(code.alphabet_out());
    for (int i = 0; i < len + extra; ++i) inputs *= static_cast<std::size_t>(k);
    std::vector<std::size_t> hits(outputs, 0);
    for (std::size_t i = 0; i < inputs; ++i) {
      std::size_t idx = 0;
      for (int x : apply_code(code, SlidingBlockCode::window_of(i, len + extra, k)))
        idx = idx * static_cast<std::size_t>(code.alphabet_out()) + static_cast<std::size_t>(x);
      ++hits[idx];
    }
    for (auto h : hits)
      if (h != expected) return false;
  }
  return true;
}

/**
 * Points of period p (σᵖx = x) in the shift presented by `pres`: words w of
 * length p whose periodic extension w^∞ is a configuration. In a sofic
 * presentation w^∞ may only be carried by a cycle spelling w^j; at word
 * boundaries some state repeats within n = #states copies, so j ≤ n.
 */
inline std::uint64_t periodic_point_count(const SoficPresentation& pres, int p) {
  if (p < 1) throw PreconditionError("period must be at least 1");
  if (p > 24) throw ResourceError("period too large for word enumeration");
  const std::size_t n = pres.num_states();
  const int k = pres.alphabet_size();
  std::uint64_t total = 0;
  std::size_t words = 1;
  for (int i = 0; i < p; ++i) words *= static_cast<std::size_t>(k);
  for (std::size_t idx = 0; idx < words; ++idx) {
    const Word w = SlidingBlockCode::window_of(idx, p, k);
    bool closes = false;
    for (std::size_t start = 0; start < n && !closes; ++start) {
      std::vector<bool> cur(n, false);
      cur[start] = true;
      for (std::size_t rep = 0; rep < n && !closes; ++rep) {
        for (int x : w) {
          std::vector<bool> nxt(n, false);
          for (const auto& e : pres.edges())
            if (cur[e.src] && e.label == x) nxt[e.dst] = true;
          cur = std::move(nxt);
        }
        closes = cur[start];
      }
    }
    if (closes) ++total;
  }
  return total;
}

/// trace(Aᵖ) of the adjacency matrix: periodic points of a vertex or edge shift.
inline std::uint64_t adjacency_trace_power(const SoficPresentation& pres, int p) {
  const auto a = pres.adjacency();
  const std::size_t n = a.size();
  std::vector<std::vector<long long>> pw(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
  for (int step = 0; step < p; ++step) {
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j) next[i][j] += pw[i][m] * a[m][j];
    pw = std::move(next);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t += static_cast<std::uint64_t>(pw[i][i]);
  return t;
}

struct MooreSearchResult {
  std::optional<SlidingBlockCode> code;
  int radius = -1;                // radius of the returned code
  std::uint64_t candidates = 0;   // codes examined in total
};

/**
 * First code of radius r ≤ max_radius (memory = anticipation = r) that maps
 * the shift onto itself but is not pre-injective, in order of radius and then
 * rule table. Only outputs on windows that occur in the shift are enumerated
 * (lexicographically, earlier windows most significant); the rest are 0.
 */
inline MooreSearchResult moore_counterexample_search(const SoficPresentation& shift, int max_radius) {
  if (max_radius < 0) throw PreconditionError("radius must be nonnegative");
  const int k = shift.alphabet_size();
  const Dfa lang = language_automaton(shift, k);
  MooreSearchResult result;
  for (int r = 0; r <= max_radius; ++r) {
    const int w = 2 * r + 1;
    std::vector<std::size_t> windows;
    std::size_t total = 1;
    for (int i = 0; i < w; ++i) total *= static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < total; ++i)
      if (lang.accepts(SlidingBlockCode::window_of(i, w, k))) windows.push_back(i);
    if (windows.size() > 40) throw ResourceError("too many windows to enumerate codes exhaustively");
    // Cheap screen: images of allowed (L + 2r)-words must be exactly the allowed L-words.
    constexpr int kScreen = 6;
    std::size_t screen_total = 1;
    for (int i = 0; i < kScreen; ++i) screen_total *= static_cast<std::size_t>(k);
    std::vector<char> target(screen_total, 0);
    for (std::size_t i = 0; i < screen_total; ++i)
      target[i] = lang.accepts(SlidingBlockCode::window_of(i, kScreen, k)) ? 1 : 0;
    std::vector<Word> sources;
    for (const auto& u : all_words(k, kScreen + 2 * r))
      if (static_cast<int>(u.size()) == kScreen + 2 * r && lang.accepts(u)) sources.push_back(u);
    std::vector<char> seen(screen_total);
    std::vector<int> digits(windows.size(), 0);
    while (true) {
      std::vector<int> table(total, 0);
      for (std::size_t i = 0; i < windows.size(); ++i) table[windows[i]] = digits[i];
      const SlidingBlockCode code(k, k, r, r, std::move(table));
      ++result.candidates;
      std::fill(seen.begin(), seen.end(), 0);
      bool screened = true;
      for (const auto& u : sources) {
        std::size_t idx = 0;
        for (const int s : apply_code(code, u)) idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(s);
        if (!target[idx]) {
          screened = false;
          break;
        }
        seen[idx] = 1;
      }
      if (screened && seen != target) screened = false;
      if (screened && language_equal(image_presentation(code, shift), shift) &&
          !pre_injective_code(code, shift, false)) {
        result.code = code;
        result.radius = r;
        return result;
      }
      // Odometer with the last window least significant.
      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] == k - 1) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return result;
}

}  // namespace goe
