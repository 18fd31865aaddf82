#pragma once

#include "lovol/curvature.hpp"

namespace lovol {

// Local invariants entering the volume integrals, by weight:
//   alpha_0 = 1                                             (units 1)
//   alpha_1 = -kappa / 12                                   (units 1/length^2)
//   alpha_2 = -(12 Delta kappa - 5 kappa^2 + 8 |Ric|^2 + 7 |R|^2) / 1440
//                                                           (units 1/length^4)
struct AlphaValues {
  double alpha0 = 1.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

// Weight-j invariant at a point; throws UnsupportedWeight for j >= 3 (no
// closed formula is tabulated) and BadParameter for j < 0.
double alpha(const CurvaturePoint& p, int j);

AlphaValues alpha_all(const CurvaturePoint& p);

}  // namespace lovol
