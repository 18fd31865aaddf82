#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lovol/catalog.hpp"
#include "lovol/chart.hpp"
#include "lovol/curvature.hpp"
#include "lovol/quadrature.hpp"

namespace lovol {

enum class VolumeMethod {
  quadrature,    // midpoint rule over the alpha density
  homogeneous,   // single-point invariant times the exact volume
  parity_zero,   // n - k odd: no integration performed
  unsupported,   // alpha weight >= 3: no formula available
};

const char* to_string(VolumeMethod m);

struct VolumeReport {
  int n = 0;
  int k = 0;
  bool parity_zero = false;
  double coefficient = 0.0;     // nu_{n,k} (or nu'_{n,k} for odd n)
  double integral_alpha = 0.0;  // integral of alpha_{(n-k)/2} dv
  double volume_k = 0.0;        // coefficient * integral_alpha
  double error_estimate = 0.0;
  VolumeMethod method = VolumeMethod::quadrature;
  std::string units;            // "length^k"
  std::int64_t nodes_used = 0;
  std::string note;             // reason text for unsupported entries
};

struct VolumeOptions {
  bool force_quadrature = false;
  // Per-axis resolution override; implies full quadrature.
  std::optional<int> resolution;
  StencilOptions stencil{};
};

// Vol^(k) of the manifold described by (source, chart): parity short-circuit,
// then coefficient(n, k) times the integral of alpha_{(n-k)/2} dv. Throws
// UnsupportedWeight when (n - k)/2 >= 2 + 1, i.e. no alpha formula exists.
VolumeReport lower_volume(const MetricSource& source, const Chart& chart, int k,
                          const VolumeOptions& opts = {});

VolumeReport lower_volume(const CatalogManifold& m, int k, const VolumeOptions& opts = {});

// Reports for k = 1..n; entries whose alpha weight is unsupported are
// reported with method = unsupported rather than dropped.
std::vector<VolumeReport> full_report(const MetricSource& source, const Chart& chart,
                                      const VolumeOptions& opts = {});

std::vector<VolumeReport> full_report(const CatalogManifold& m, const VolumeOptions& opts = {});

}  // namespace lovol
