#pragma once

/**
 * Labeled directed graphs presenting sofic shifts. Symbols are the integers
 * 0..alphabet-1. A presentation is always trimmed to its essential part, so
 * every state lies on a bi-infinite path and every state may serve as a
 * start or end of a word.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "goe/errors.hpp"

namespace goe {

using Word = std::vector<int>;

struct Edge {
  int src = 0;
  int label = 0;
  int dst = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

/// States surviving repeated removal of states without an incoming (or outgoing) edge.
inline std::vector<bool> prune(std::size_t n, const std::vector<Edge>& edges, bool need_in, bool need_out,
                               std::vector<bool> alive) {
  std::vector<int> in(n, 0), out(n, 0);
  std::vector<std::vector<int>> succ(n), pred(n);
  for (const auto& e : edges) {
    if (!alive[e.src] || !alive[e.dst]) continue;
    ++out[e.src];
    ++in[e.dst];
    succ[e.src].push_back(e.dst);
    pred[e.dst].push_back(e.src);
  }
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && ((need_in && in[v] == 0) || (need_out && out[v] == 0))) queue.push_back(static_cast<int>(v));
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int w : succ[v])
      if (alive[w] && --in[w] == 0 && need_in) queue.push_back(w);
    for (int w : pred[v])
      if (alive[w] && --out[w] == 0 && need_out) queue.push_back(w);
  }
  return alive;
}

}  // namespace detail

class SoficPresentation {
 public:
  /// Builds and trims. Throws EmptyShiftError when no bi-infinite path exists.
  SoficPresentation(int alphabet_size, std::vector<std::string> state_names, std::vector<Edge> edges)
      : alphabet_(alphabet_size) {
    if (alphabet_size < 1) throw PreconditionError("alphabet must be nonempty");
    const std::size_t n = state_names.size();
    for (const auto& e : edges) {
      if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= n || static_cast<std::size_t>(e.dst) >= n)
        throw PreconditionError("edge refers to an unknown state");
      if (e.label < 0 || e.label >= alphabet_size) throw PreconditionError("edge label outside the alphabet");
    }
    const auto alive = detail::prune(n, edges, true, true, std::vector<bool>(n, true));
    std::vector<int> index(n, -1);
    for (std::size_t v = 0; v < n; ++v)
      if (alive[v]) {
        index[v] = static_cast<int>(names_.size());
        names_.push_back(std::move(state_names[v]));
        original_.push_back(static_cast<int>(v));
      }
    if (names_.empty()) throw EmptyShiftError("presentation has no bi-infinite path: the shift is empty");
    for (const auto& e : edges)
      if (alive[e.src] && alive[e.dst]) edges_.push_back({index[e.src], e.label, index[e.dst]});
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    out_.assign(names_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) out_[edges_[i].src].push_back(static_cast<int>(i));
  }

  int alphabet_size() const { return alphabet_; }
  std::size_t num_states() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Index each surviving state had in the untrimmed input.
  const std::vector<int>& original_indices() const { return original_; }
  const std::vector<int>& out_edges(int state) const { return out_[state]; }

  bool is_deterministic() const {
    for (const auto& es : out_) {
      std::vector<int> labels;
      for (int e : es) labels.push_back(edges_[e].label);
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
    return true;
  }

  /// Edge-count adjacency matrix.
  std::vector<std::vector<long long>> adjacency() const {
    std::vector<std::vector<long long>> a(num_states(), std::vector<long long>(num_states(), 0));
    for (const auto& e : edges_) ++a[e.src][e.dst];
    return a;
  }

 private:
  int alphabet_;
  std::vector<std::string> names_;
  std::vector<int> original_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (int x : w) s += (x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")");
  return s;
}

/// Parses a word of single-digit symbols, e.g. "0110".
inline Word word_from_string(const std::string& s) {
  Word w;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParseError("word symbols must be digits, got '" + s + "'");
    w.push_back(ch - '0');
  }
  return w;
}

/// One state, one loop per symbol.
inline SoficPresentation full_shift(int alphabet_size) {
  std::vector<Edge> edges;
  for (int s = 0; s < alphabet_size; ++s) edges.push_back({0, s, 0});
  return SoficPresentation(alphabet_size, {"*"}, std::move(edges));
}

/**
 * Presentation of the SFT of configurations whose length-n windows all lie
 * in `allowed`: states are words of length n-1, and the allowed word
 * a₀…aₙ₋₁ is an edge a₀…aₙ₋₂ → a₁…aₙ₋₁ labeled aₙ₋₁.
 */
inline SoficPresentation sft_from_allowed_words(int alphabet_size, int n, const std::vector<Word>& allowed) {
  if (n < 1) throw PreconditionError("window length must be at least 1");
  if (allowed.empty()) throw PreconditionError("the set of allowed words is empty");
  std::map<Word, int> state_of;
  std::vector<std::string> names;
  auto state = [&](const Word& w) {
    auto [it, fresh] = state_of.emplace(w, static_cast<int>(names.size()));
    if (fresh) names.push_back(w.empty() ? "*" : word_to_string(w));
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& w : allowed) {
    if (static_cast<int>(w.size()) != n) throw PreconditionError("allowed word has the wrong length");
    for (int s : w)
      if (s < 0 || s >= alphabet_size) throw PreconditionError("allowed word uses a symbol outside the alphabet");
    const int from = state(Word(w.begin(), w.end() - 1));
    const int to = state(Word(w.begin() + 1, w.end()));
    edges.push_back({from, w.back(), to});
  }
  return SoficPresentation(alphabet_size, std::move(names), std::move(edges));
}

struct MixingReport {
  bool irreducible = false;
  bool mixing = false;
  int period = 0;                // gcd of cycle lengths, when irreducible
  std::optional<int> witness;    // least k with every entry of Aᵏ positive
};

inline MixingReport irreducibility_and_mixing(const SoficPresentation& p) {
  const std::size_t n = p.num_states();
  std::vector<std::vector<int>> succ(n), pred(n);
  for (const auto& e : p.edges()) {
    succ[e.src].push_back(e.dst);
    pred[e.dst].push_back(e.src);
  }
  auto reach = [&](const std::vector<std::vector<int>>& g, std::vector<int>& level) {
    level.assign(n, -1);
    level[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g[queue[i]])
        if (level[w] < 0) {
          level[w] = level[queue[i]] + 1;
          queue.push_back(w);
        }
    return queue.size() == n;
  };
  MixingReport r;
  std::vector<int> level, back;
  r.irreducible = reach(succ, level) && reach(pred, back);
  if (!r.irreducible) return r;
  int g = 0;
  for (const auto& e : p.edges()) g = std::gcd(g, std::abs(level[e.src] + 1 - level[e.dst]));
  r.period = g;
  r.mixing = g == 1;
  if (r.mixing) {
    // Boolean powers; a primitive n-state matrix is positive by power (n-1)² + 1.
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false)), pw;
    for (const auto& e : p.edges()) a[e.src][e.dst] = true;
    pw = a;
    const int bound = static_cast<int>((n - 1) * (n - 1) + 1);
    for (int k = 1; k <= bound; ++k) {
      bool positive = true;
      for (std::size_t i = 0; i < n && positive; ++i)
        for (std::size_t j = 0; j < n && positive; ++j) positive = pw[i][j];
      if (positive) {
        r.witness = k;
        break;
      }
      std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
          if (pw[i][m])
            for (std::size_t j = 0; j < n; ++j)
              if (a[m][j]) next[i][j] = true;
      pw = std::move(next);
    }
  }
  return r;
}

}  // namespace goe
