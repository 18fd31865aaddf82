#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lovol/errors.hpp"
#include "lovol/types.hpp"

namespace lovol {

// A single coordinate box with a midpoint grid: node j on axis a sits at
// lower[a] + (j + 1/2) h[a], h[a] = (upper[a] - lower[a]) / resolution[a].
struct Chart {
  int dim = 0;
  Vec lower;
  Vec upper;
  IVec resolution;            // nodes per axis, >= 4
  std::vector<bool> periodic; // per axis
  bool homogeneous = false;   // pointwise invariants constant over the manifold
  std::optional<double> exact_volume;

  Chart() = default;
  Chart(Vec lo, Vec up, IVec res, std::vector<bool> per, bool homog = false,
        std::optional<double> exact_vol = std::nullopt);

  double spacing(int axis) const { return (upper[axis] - lower[axis]) / resolution[axis]; }
  double min_spacing() const;
  std::int64_t node_count() const;
  double node_coord(int axis, int index) const {
    return lower[axis] + (index + 0.5) * spacing(axis);
  }
  // Node coordinates from the row-major linear index (last axis fastest).
  Vec node(std::int64_t linear) const;
  // Box midpoint; interior reference point for the homogeneous fast path.
  Vec center() const { return 0.5 * (lower + upper); }

  Chart with_resolution(int res_per_axis) const;
};

// Pointwise metric sampler. Implementations may provide exact first and
// second coordinate derivatives of g; the curvature engine prefers them over
// finite differences when present.
class MetricSource {
 public:
  virtual ~MetricSource() = default;

  virtual int dim() const = 0;
  // Symmetric positive definite n x n matrix g_ij at x.
  virtual Mat metric_at(const Vec& x) const = 0;

  virtual bool has_derivatives() const { return false; }
  // dg[a] = d g / d x^a. Only called when has_derivatives() is true.
  virtual std::vector<Mat> d_metric_at(const Vec& x) const;
  // ddg[a * n + b] = d^2 g / (d x^a d x^b), symmetric in (a, b).
  virtual std::vector<Mat> dd_metric_at(const Vec& x) const;

  // Non-null when samples exist only on a fixed node lattice; finite
  // differences must then step in whole node spacings.
  virtual const Chart* grid_lock() const { return nullptr; }
};

// Row-major storage of the n(n+1)/2 upper-triangle metric components at
// every midpoint node of a chart.
struct GridMetric {
  Chart chart;
  std::vector<double> samples;

  std::int64_t component_count() const {
    return std::int64_t(chart.dim) * (chart.dim + 1) / 2;
  }
  Mat metric_at_node(std::int64_t linear) const;
};

// Evaluate the source at every midpoint node, validating positive
// definiteness node by node.
GridMetric sample(const MetricSource& source, const Chart& chart);

// (g^{-1}, sqrt(det g)) via Cholesky; throws NonPositiveDefinite otherwise.
std::pair<Mat, double> inverse_and_density(const Mat& g);
double density(const Mat& g);

// Metric source backed by a stored grid: exact at node coordinates (with
// wraparound on periodic axes), an error anywhere else.
class GridMetricSource : public MetricSource {
 public:
  explicit GridMetricSource(GridMetric grid);

  int dim() const override { return grid_.chart.dim; }
  Mat metric_at(const Vec& x) const override;
  const Chart* grid_lock() const override { return &grid_.chart; }
  const GridMetric& grid() const { return grid_; }

 private:
  GridMetric grid_;
};

// Grid-metric JSON file, schema:
//   {"dim":n, "lower":[...], "upper":[...], "resolution":[...],
//    "periodic":[...], "components":[...]}
// with numbers printed to 17 significant digits so they round-trip exactly.
void write_grid_metric(const GridMetric& grid, const std::string& path);
GridMetric read_grid_metric(const std::string& path);
std::string grid_metric_to_json(const GridMetric& grid);

}  // namespace lovol
