#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lovol/chart.hpp"

namespace lovol {

// Closed-form pointwise constants for homogeneous reference manifolds.
struct ReferenceConstants {
  double kappa = 0.0;
  double ricci_norm2 = 0.0;
  double riemann_norm2 = 0.0;
  double lap_kappa = 0.0;
  double volume = 0.0;
};

struct CatalogManifold {
  std::string name;
  Chart chart;
  std::shared_ptr<const MetricSource> source;
  std::optional<ReferenceConstants> reference;
};

// Flat torus with the given side lengths; periodic box, identity metric.
CatalogManifold flat_torus(const std::vector<double>& sides, int resolution = 16);

// Round n-sphere of the given radius in hyperspherical coordinates on the
// open dense chart (0,pi)^{n-1} x (0,2pi), with closed-form metric
// derivatives. resolution 0 picks a per-dimension default sized so midpoint
// quadrature reaches ~1e-3 relative error at tolerable node counts.
CatalogManifold sphere(int n, double radius, int resolution = 0);

// Riemannian product with block-diagonal metric on the concatenated chart.
CatalogManifold product(const std::vector<CatalogManifold>& factors);

// Vol S^n(r) = 2 pi^{(n+1)/2} r^n / Gamma((n+1)/2).
double sphere_volume(int n, double radius);

int default_sphere_resolution(int n);

}  // namespace lovol
