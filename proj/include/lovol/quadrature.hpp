#pragma once

#include <cstdint>
#include <functional>

#include "lovol/chart.hpp"
#include "lovol/types.hpp"

namespace lovol {

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;   // |V(N) - V(N/2)| / (2^p - 1), p = 2
  std::int64_t nodes_used = 0;   // integrand evaluations across both passes
  bool homogeneous_path = false; // single-point fast path taken
};

using Integrand = std::function<double(const Vec&)>;

struct QuadratureOptions {
  // Run the midpoint rule even on homogeneous charts with exact volumes.
  bool force_quadrature = false;
  // Skip the half-resolution comparison pass (error_estimate left at 0).
  bool error_pass = true;
};

// Midpoint product rule for a density already containing the sqrt(det g)
// factor. Streams node values into a deterministic pairwise reduction.
IntegralResult integrate_density(const Chart& chart, const Integrand& density_integrand,
                                 const QuadratureOptions& opts = {});

// Integral of invariant(x) dv = invariant(x) sqrt(det g) dx. On homogeneous
// charts with a recorded exact volume this evaluates the invariant once at
// the box midpoint and multiplies by the exact volume; otherwise it falls
// back to integrate_density on the product.
IntegralResult integrate(const Chart& chart, const Integrand& invariant,
                         const Integrand& density, const QuadratureOptions& opts = {});

}  // namespace lovol
