#include "lovol/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "lovol/errors.hpp"
#include "lovol/parallel.hpp"

namespace lovol {
namespace {

double midpoint_pass(const Chart& chart, const Integrand& f) {
  double cell = 1.0;
  for (int a = 0; a < chart.dim; ++a) cell *= chart.spacing(a);
  const std::int64_t count = chart.node_count();
  double sum = parallel_pairwise_sum(count, [&](std::int64_t i) { return f(chart.node(i)); });
  return cell * sum;
}

}  // namespace

IntegralResult integrate_density(const Chart& chart, const Integrand& density_integrand,
                                 const QuadratureOptions& opts) {
  IntegralResult out;
  out.value = midpoint_pass(chart, density_integrand);
  out.nodes_used = chart.node_count();
  if (!opts.error_pass) return out;

  IVec half = chart.resolution;
  bool distinct = false;
  for (int a = 0; a < chart.dim; ++a) {
    half[a] = std::max<std::int64_t>(4, chart.resolution[a] / 2);
    distinct = distinct || half[a] != chart.resolution[a];
  }
  if (!distinct) return out;  // nothing coarser to compare against

  Chart coarse(chart.lower, chart.upper, half, chart.periodic);
  const double coarse_value = midpoint_pass(coarse, density_integrand);
  out.nodes_used += coarse.node_count();
  // Richardson gap for the O(h^2) midpoint rule: p = 2.
  out.error_estimate = std::abs(out.value - coarse_value) / 3.0;
  return out;
}

IntegralResult integrate(const Chart& chart, const Integrand& invariant,
                         const Integrand& density, const QuadratureOptions& opts) {
  if (chart.homogeneous && chart.exact_volume && !opts.force_quadrature) {
    IntegralResult out;
    out.value = invariant(chart.center()) * *chart.exact_volume;
    out.nodes_used = 1;
    out.homogeneous_path = true;
    return out;
  }
  return integrate_density(
      chart, [&](const Vec& x) { return invariant(x) * density(x); }, opts);
}

}  // namespace lovol
