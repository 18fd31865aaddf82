#include "lovol/volumes.hpp"

#include <cmath>

#include "lovol/coefficients.hpp"
#include "lovol/errors.hpp"
#include "lovol/invariants.hpp"

namespace lovol {

const char* to_string(VolumeMethod m) {
  switch (m) {
    case VolumeMethod::quadrature:
      return "quadrature";
    case VolumeMethod::homogeneous:
      return "homogeneous";
    case VolumeMethod::parity_zero:
      return "parity_zero";
    case VolumeMethod::unsupported:
      return "unsupported";
  }
  return "unknown";
}

VolumeReport lower_volume(const MetricSource& source, const Chart& chart, int k,
                          const VolumeOptions& opts) {
  const int n = chart.dim;
  const CoefficientSet cs = nu(n, k);  // validates 1 <= k <= n

  VolumeReport rep;
  rep.n = n;
  rep.k = k;
  rep.units = "length^" + std::to_string(k);
  rep.coefficient = cs.coefficient;
  if (cs.vanishes) {
    rep.parity_zero = true;
    rep.method = VolumeMethod::parity_zero;
    return rep;
  }

  const int j = (n - k) / 2;
  if (j > 2)
    throw UnsupportedWeightError("Vol^(" + std::to_string(k) + ") of an " + std::to_string(n) +
                                 "-manifold needs the weight-" + std::to_string(j) +
                                 " invariant; supported weights are 0, 1, 2");

  Chart box = chart;
  QuadratureOptions q;
  q.force_quadrature = opts.force_quadrature;
  if (source.grid_lock()) {
    // Samples exist only on the stored lattice: integrate on exactly that
    // grid and skip the half-resolution pass (its nodes interleave the
    // lattice and cannot be evaluated).
    if (opts.resolution)
      throw BadParameterError("grid metrics cannot be resampled to a new resolution");
    box = *source.grid_lock();
    q.error_pass = false;
  } else if (opts.resolution) {
    box = chart.with_resolution(*opts.resolution);
    q.force_quadrature = true;  // an explicit resolution asks for real quadrature
  }

  auto dens = [&](const Vec& x) { return density(source.metric_at(x)); };
  IntegralResult res;
  if (j == 0) {
    res = integrate(
        box, [](const Vec&) { return 1.0; }, dens, q);
  } else {
    CurvatureEngine engine(source, box, opts.stencil);
    if (j == 1) {
      res = integrate(
          box, [&](const Vec& x) { return -engine.riemann(x).kappa / 12.0; }, dens, q);
    } else {
      res = integrate(
          box, [&](const Vec& x) { return alpha(engine.curvature_point(x), 2); }, dens, q);
    }
  }

  rep.integral_alpha = res.value;
  rep.volume_k = cs.coefficient * res.value;
  rep.error_estimate = std::abs(cs.coefficient) * res.error_estimate;
  rep.nodes_used = res.nodes_used;
  rep.method = res.homogeneous_path ? VolumeMethod::homogeneous : VolumeMethod::quadrature;
  return rep;
}

VolumeReport lower_volume(const CatalogManifold& m, int k, const VolumeOptions& opts) {
  return lower_volume(*m.source, m.chart, k, opts);
}

std::vector<VolumeReport> full_report(const MetricSource& source, const Chart& chart,
                                      const VolumeOptions& opts) {
  std::vector<VolumeReport> reports;
  for (int k = 1; k <= chart.dim; ++k) {
    try {
      reports.push_back(lower_volume(source, chart, k, opts));
    } catch (const UnsupportedWeightError& e) {
      VolumeReport rep;
      rep.n = chart.dim;
      rep.k = k;
      rep.units = "length^" + std::to_string(k);
      rep.coefficient = nu(chart.dim, k).coefficient;
      rep.method = VolumeMethod::unsupported;
      rep.note = e.what();
      reports.push_back(rep);
    }
  }
  return reports;
}

std::vector<VolumeReport> full_report(const CatalogManifold& m, const VolumeOptions& opts) {
  return full_report(*m.source, m.chart, opts);
}

}  // namespace lovol
