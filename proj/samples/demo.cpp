// Walks through the library on a few small systems. Build target: goe_demo.

#include <iostream>

#include "goe/goe.hpp"

using namespace goe;

int main() {
  const IntegerMatrix cat{{2, 1}, {1, 1}};
  const auto cls = classify_matrix(cat);
  std::cout << "cat map: chi = " << to_string(cls.char_poly) << ", hyperbolic = " << cls.is_hyperbolic << "\n";

  // x -> 2x commutes with every automorphism
  const AffineToralMap doubling(IntegerMatrix::scalar(2, Integer(2)));
  std::cout << "x -> 2x: " << to_json(goe_verdict(doubling, cat)).dump() << "\n";

  const auto split = stable_splitting(cat);
  const auto h = homoclinic_point(split, {Integer(1), Integer(0)});
  std::cout << "h_(1,0) = " << to_json(h).dump() << ", decays: " << verify_decay(split, h, 20) << "\n";

  // ergodic but not hyperbolic: the zero map is pre-injective yet not onto
  const IntegerMatrix a4{{0, 0, 0, 1}, {-1, 0, 0, 2}, {0, -1, 0, 1}, {0, 0, -1, 2}};
  std::cout << "zero map on the 4x4 system: " << to_json(goe_verdict(AffineToralMap(IntegerMatrix(4)), a4)).dump()
            << "\n";

  const auto sys = even_shift_system();
  std::cout << "golden -> even factor, language check: "
            << language_equal(image_presentation(sys.label_code, golden_mean_shift()), sys.even) << "\n";
  const auto moore = moore_counterexample_search(sys.even, 2);
  if (moore.code) std::cout << "even shift, onto but not pre-injective: " << code_to_json(*moore.code).dump() << "\n";
}
