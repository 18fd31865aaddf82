#include "lovol/chart.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

#include "lovol/parallel.hpp"

namespace lovol {

Chart::Chart(Vec lo, Vec up, IVec res, std::vector<bool> per, bool homog,
             std::optional<double> exact_vol)
    : dim(int(lo.size())),
      lower(std::move(lo)),
      upper(std::move(up)),
      resolution(std::move(res)),
      periodic(std::move(per)),
      homogeneous(homog),
      exact_volume(exact_vol) {
  if (dim < 1 || dim > kMaxDim)
    throw BadParameterError("chart dimension must be between 1 and " + std::to_string(kMaxDim));
  if (upper.size() != dim || resolution.size() != dim || int(periodic.size()) != dim)
    throw BadParameterError("chart axis arrays must all have length dim");
  for (int a = 0; a < dim; ++a) {
    if (!(lower[a] < upper[a])) throw BadParameterError("chart bounds must satisfy lower < upper");
    if (resolution[a] < 4) throw BadParameterError("chart resolution must be >= 4 per axis");
  }
  if (homogeneous && !exact_volume)
    throw BadParameterError("homogeneous charts require exact_volume");
}

double Chart::min_spacing() const {
  double h = spacing(0);
  for (int a = 1; a < dim; ++a) h = std::min(h, spacing(a));
  return h;
}

std::int64_t Chart::node_count() const {
  std::int64_t n = 1;
  for (int a = 0; a < dim; ++a) n *= resolution[a];
  return n;
}

Vec Chart::node(std::int64_t linear) const {
  Vec x(dim);
  for (int a = dim - 1; a >= 0; --a) {
    const std::int64_t r = resolution[a];
    x[a] = node_coord(a, int(linear % r));
    linear /= r;
  }
  return x;
}

Chart Chart::with_resolution(int res_per_axis) const {
  Chart c = *this;
  c.resolution.setConstant(dim, res_per_axis);
  return c;
}

std::vector<Mat> MetricSource::d_metric_at(const Vec&) const {
  throw MissingDerivativesError("metric source does not provide first derivatives");
}

std::vector<Mat> MetricSource::dd_metric_at(const Vec&) const {
  throw MissingDerivativesError("metric source does not provide second derivatives");
}

Mat GridMetric::metric_at_node(std::int64_t linear) const {
  const int n = chart.dim;
  const std::int64_t m = component_count();
  Mat g(n, n);
  const double* p = samples.data() + linear * m;
  for (int i = 0, c = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++c) {
      g(i, j) = p[c];
      g(j, i) = p[c];
    }
  return g;
}

GridMetric sample(const MetricSource& source, const Chart& chart) {
  if (source.dim() != chart.dim)
    throw BadParameterError("metric source dimension does not match chart");
  GridMetric grid;
  grid.chart = chart;
  const int n = chart.dim;
  const std::int64_t m = std::int64_t(n) * (n + 1) / 2;
  const std::int64_t count = chart.node_count();
  grid.samples.resize(std::size_t(count * m));

  parallel_blocks(count, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t idx = begin; idx < end; ++idx) {
      const Vec x = chart.node(idx);
      const Mat g = source.metric_at(x);
      Eigen::LLT<Mat> llt(g);
      if (llt.info() != Eigen::Success) {
        std::ostringstream os;
        os << "metric not positive definite at node " << idx << " (";
        for (int a = 0; a < n; ++a) os << (a ? ", " : "") << x[a];
        os << ")";
        throw NonPositiveDefiniteError(os.str());
      }
      double* p = grid.samples.data() + idx * m;
      for (int i = 0, c = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++c) p[c] = g(i, j);
    }
  });
  return grid;
}

std::pair<Mat, double> inverse_and_density(const Mat& g) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw NonPositiveDefiniteError("metric not positive definite");
  const int n = int(g.rows());
  double dens = 1.0;
  for (int i = 0; i < n; ++i) dens *= llt.matrixL()(i, i);
  Mat inv = llt.solve(Mat::Identity(n, n));
  return {std::move(inv), dens};
}

double density(const Mat& g) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw NonPositiveDefiniteError("metric not positive definite");
  double dens = 1.0;
  for (int i = 0; i < int(g.rows()); ++i) dens *= llt.matrixL()(i, i);
  return dens;
}

GridMetricSource::GridMetricSource(GridMetric grid) : grid_(std::move(grid)) {
  const std::int64_t want = grid_.chart.node_count() * grid_.component_count();
  if (std::int64_t(grid_.samples.size()) != want)
    throw BadParameterError("grid metric sample count does not match chart");
}

Mat GridMetricSource::metric_at(const Vec& x) const {
  const Chart& c = grid_.chart;
  std::int64_t linear = 0;
  for (int a = 0; a < c.dim; ++a) {
    const double h = c.spacing(a);
    const double fidx = (x[a] - c.lower[a]) / h - 0.5;
    std::int64_t j = std::int64_t(std::llround(fidx));
    if (std::abs(fidx - double(j)) > 1e-6)
      throw BadParameterError("grid metric sampled off the node lattice");
    const std::int64_t r = c.resolution[a];
    if (c.periodic[a]) {
      j %= r;
      if (j < 0) j += r;
    } else if (j < 0 || j >= r) {
      throw MissingDerivativesError("grid metric sampled outside a non-periodic axis");
    }
    linear = linear * r + j;
  }
  return grid_.metric_at_node(linear);
}

}  // namespace lovol
