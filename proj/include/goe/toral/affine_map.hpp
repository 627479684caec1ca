#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/number.hpp"

namespace goe {

using RationalVector = std::vector<Rational>;

/// x̄ ↦ B x + c mod ℤⁿ, with c reduced into [0, 1)ⁿ.
class AffineToralMap {
 public:
  AffineToralMap(IntegerMatrix b, RationalVector c) : b_(std::move(b)), c_(std::move(c)) {
    if (b_.size() == 0) throw PreconditionError("affine map needs dimension at least 1");
    if (c_.size() != b_.size()) throw PreconditionError("translation length does not match matrix dimension");
    for (auto& x : c_) x = frac_of(x);
  }

  explicit AffineToralMap(IntegerMatrix b) : AffineToralMap(b, RationalVector(b.size(), Rational(0))) {}

  std::size_t dim() const { return b_.size(); }
  const IntegerMatrix& linear() const { return b_; }
  const RationalVector& translation() const { return c_; }

  bool is_linear() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const AffineToralMap&, const AffineToralMap&) = default;

 private:
  IntegerMatrix b_;
  RationalVector c_;
};

/// τ₁ ⊕ τ₂ on 𝕋^{n₁+n₂}.
inline AffineToralMap direct_sum(const AffineToralMap& x, const AffineToralMap& y) {
  RationalVector c = x.translation();
  c.insert(c.end(), y.translation().begin(), y.translation().end());
  return AffineToralMap(direct_sum<Integer>({x.linear(), y.linear()}), std::move(c));
}

}  // namespace goe
