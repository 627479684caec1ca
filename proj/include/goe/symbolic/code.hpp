#pragma once

#include <cstddef>
#include <vector>

#include "goe/errors.hpp"
#include "goe/symbolic/presentation.hpp"

namespace goe {

/**
 * Sliding block code with memory m and anticipation a:
 * τ(x)ᵢ = rule(x_{i-m} … x_{i+a}). The rule table is indexed by the window
 * read as a base-k number, leftmost symbol most significant.
 */
class SlidingBlockCode {
 public:
  SlidingBlockCode(int alphabet_in, int alphabet_out, int memory, int anticipation, std::vector<int> table)
      : in_(alphabet_in), out_(alphabet_out), m_(memory), a_(anticipation), table_(std::move(table)) {
    if (in_ < 1 || out_ < 1) throw PreconditionError("alphabets must be nonempty");
    if (m_ < 0 || a_ < 0) throw PreconditionError("memory and anticipation must be nonnegative");
    std::size_t expect = 1;
    for (int i = 0; i < window(); ++i) {
      expect *= static_cast<std::size_t>(in_);
      if (expect > (std::size_t{1} << 24)) throw ResourceError("rule table too large");
    }
    if (table_.size() != expect) throw PreconditionError("rule table must cover every window exactly once");
    for (int v : table_)
      if (v < 0 || v >= out_) throw PreconditionError("rule output outside the output alphabet");
  }

  int alphabet_in() const { return in_; }
  int alphabet_out() const { return out_; }
  int memory() const { return m_; }
  int anticipation() const { return a_; }
  int window() const { return m_ + 1 + a_; }
  const std::vector<int>& table() const { return table_; }

  std::size_t window_index(const int* begin) const {
    std::size_t idx = 0;
    for (int i = 0; i < window(); ++i) idx = idx * static_cast<std::size_t>(in_) + static_cast<std::size_t>(begin[i]);
    return idx;
  }

  int rule(const Word& w) const {
    if (static_cast<int>(w.size()) != window()) throw PreconditionError("window has the wrong length");
    return table_[window_index(w.data())];
  }

  static Word window_of(std::size_t index, int length, int alphabet) {
    Word w(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
      w[i] = static_cast<int>(index % static_cast<std::size_t>(alphabet));
      index /= static_cast<std::size_t>(alphabet);
    }
    return w;
  }

  friend bool operator==(const SlidingBlockCode&, const SlidingBlockCode&) = default;

 private:
  int in_, out_, m_, a_;
  std::vector<int> table_;
};

/// Output word of length |w| - m - a.
inline Word apply_code(const SlidingBlockCode& code, const Word& w) {
  const int len = static_cast<int>(w.size()) - code.memory() - code.anticipation();
  if (len < 1) throw PreconditionError("word shorter than the code window");
  for (int s : w)
    if (s < 0 || s >= code.alphabet_in()) throw PreconditionError("word uses a symbol outside the input alphabet");
  Word out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out[i] = code.table()[code.window_index(w.data() + i)];
  return out;
}

inline SlidingBlockCode identity_code(int alphabet) {
  std::vector<int> t(static_cast<std::size_t>(alphabet));
  for (int s = 0; s < alphabet; ++s) t[s] = s;
  return SlidingBlockCode(alphabet, alphabet, 0, 0, std::move(t));
}

/// Radius-1 binary rule in Wolfram numbering: window (x₋₁ x₀ x₁) = i maps to bit i of `rule`.
inline SlidingBlockCode elementary_rule(unsigned rule) {
  if (rule > 255) throw PreconditionError("elementary rule numbers run from 0 to 255");
  std::vector<int> t(8);
  for (unsigned i = 0; i < 8; ++i) t[i] = static_cast<int>((rule >> i) & 1U);
  return SlidingBlockCode(2, 2, 1, 1, std::move(t));
}

/// Builds a code from a function of the window.
template <class F>
SlidingBlockCode code_from_function(int alphabet_in, int alphabet_out, int memory, int anticipation, F&& f) {
  const int w = memory + 1 + anticipation;
  std::size_t size = 1;
  for (int i = 0; i < w; ++i) size *= static_cast<std::size_t>(alphabet_in);
  std::vector<int> t(size);
  for (std::size_t i = 0; i < size; ++i) t[i] = f(SlidingBlockCode::window_of(i, w, alphabet_in));
  return SlidingBlockCode(alphabet_in, alphabet_out, memory, anticipation, std::move(t));
}

}  // namespace goe
