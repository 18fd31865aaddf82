#include "lovol/invariants.hpp"

#include <string>

#include "lovol/errors.hpp"

namespace lovol {

double alpha(const CurvaturePoint& p, int j) {
  switch (j) {
    case 0:
      return 1.0;
    case 1:
      return -p.kappa / 12.0;
    case 2:
      return -(12.0 * p.lap_kappa - 5.0 * p.kappa * p.kappa + 8.0 * p.ricci_norm2 +
               7.0 * p.riemann_norm2) /
             1440.0;
    default:
      if (j < 0) throw BadParameterError("invariant weight must be nonnegative");
      throw UnsupportedWeightError("no closed formula for the weight-" + std::to_string(j) +
                                   " invariant; supported weights are 0, 1, 2");
  }
}

AlphaValues alpha_all(const CurvaturePoint& p) {
  return {alpha(p, 0), alpha(p, 1), alpha(p, 2)};
}

}  // namespace lovol
