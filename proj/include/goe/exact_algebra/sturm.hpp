#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"
#include "goe/exact_algebra/polynomial.hpp"

namespace goe {

/**
 * Generalized Sturm (signed remainder) sequence f0, f1, f2 = -rem(f0, f1), ...
 * Each member is rescaled by a positive constant to keep coefficients small,
 * which leaves every sign variation count unchanged.
 */
inline std::vector<RationalPolynomial> signed_remainder_sequence(const RationalPolynomial& f0,
                                                                  const RationalPolynomial& f1) {
  auto scaled = [](const RationalPolynomial& p) {
    return p.is_zero() ? p : (Rational(1) / abs_value(p.leading())) * p;
  };
  std::vector<RationalPolynomial> seq{scaled(f0)};
  if (f1.is_zero()) return seq;
  seq.push_back(scaled(f1));
  while (true) {
    RationalPolynomial r = -remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(scaled(r));
  }
  return seq;
}

inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  return signed_remainder_sequence(p, derivative(p));
}

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

inline int sign_variations_at(const std::vector<RationalPolynomial>& seq, const Rational& at) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign_of(p(at)));
  return detail::count_variations(signs);
}

/// Variations at +infinity (direction = +1) or -infinity (direction = -1).
inline int sign_variations_at_infinity(const std::vector<RationalPolynomial>& seq, int direction) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(p.leading());
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return detail::count_variations(signs);
}

/// Number of distinct real roots of p in the open interval (a, b).
inline int sturm_count(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
  if (!(a < b)) throw PreconditionError("Sturm count needs a < b");
  if (p(a) == 0 || p(b) == 0) throw EndpointRootError("interval endpoint is a root; nudge the endpoint");
  const auto seq = sturm_sequence(p);
  return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

/// Number of distinct real roots of p on the whole line.
inline int real_root_count(const RationalPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
  const auto seq = sturm_sequence(p);
  return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, +1);
}

/// Cauchy index of num/den over the real line, via the remainder sequence (den, num).
inline int cauchy_index(const RationalPolynomial& num, const RationalPolynomial& den) {
  if (den.is_zero()) throw PreconditionError("Cauchy index with zero denominator");
  if (num.is_zero()) return 0;
  const auto seq = signed_remainder_sequence(den, num);
  return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, +1);
}

/// Bound strictly exceeding the modulus of every complex root (Cauchy).
inline Rational cauchy_root_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs_value(p[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

struct RootInterval {
  Rational lo;
  Rational hi;
};

/**
 * Isolating intervals for the distinct real roots of p, in increasing order.
 * Each open interval (lo, hi) contains exactly one root and neither endpoint
 * is a root.
 */
inline std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const auto seq = sturm_sequence(p);
  const Rational bound = cauchy_root_bound(p);
  std::vector<std::pair<RootInterval, int>> work;
  {
    const RootInterval whole{-bound, bound};
    const int count = sign_variations_at(seq, whole.lo) - sign_variations_at(seq, whole.hi);
    if (count > 0) work.push_back({whole, count});
  }
  while (!work.empty()) {
    auto [iv, count] = work.back();
    work.pop_back();
    if (count == 1) {
      out.push_back(iv);
      continue;
    }
    // Split off-center when the midpoint is itself a root, so that no
    // interval endpoint is ever a root.
    Rational mid = (iv.lo + iv.hi) / 2;
    for (int t = 3; p(mid) == 0; ++t) mid = iv.lo + (iv.hi - iv.lo) / t;
    const int left = sign_variations_at(seq, iv.lo) - sign_variations_at(seq, mid);
    if (left > 0) work.push_back({{iv.lo, mid}, left});
    if (count - left > 0) work.push_back({{mid, iv.hi}, count - left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace goe
