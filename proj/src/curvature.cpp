#include "lovol/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <tuple>

#include "lovol/errors.hpp"

namespace lovol {
namespace {

struct Tap {
  int offset;
  double coeff;
};

// Central first-difference taps; divide the weighted sum by the step.
std::span<const Tap> first_taps(int order) {
  static constexpr std::array<Tap, 4> k4{{{-2, 1.0 / 12.0},
                                          {-1, -8.0 / 12.0},
                                          {1, 8.0 / 12.0},
                                          {2, -1.0 / 12.0}}};
  static constexpr std::array<Tap, 2> k2{{{-1, -0.5}, {1, 0.5}}};
  return order == 4 ? std::span<const Tap>(k4) : std::span<const Tap>(k2);
}

// Central second-difference taps; divide by step^2. Includes the center tap.
std::span<const Tap> second_taps(int order) {
  static constexpr std::array<Tap, 5> k4{{{-2, -1.0 / 12.0},
                                          {-1, 16.0 / 12.0},
                                          {0, -30.0 / 12.0},
                                          {1, 16.0 / 12.0},
                                          {2, -1.0 / 12.0}}};
  static constexpr std::array<Tap, 3> k2{{{-1, 1.0}, {0, -2.0}, {1, 1.0}}};
  return order == 4 ? std::span<const Tap>(k4) : std::span<const Tap>(k2);
}

Christoffel christoffel_from(const Mat& ginv, const std::vector<Mat>& dg, int n) {
  Christoffel gamma;
  gamma.n = n;
  gamma.v.assign(std::size_t(n) * n * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l)
          acc += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma.at(k, i, j) = 0.5 * acc;
        gamma.at(k, j, i) = 0.5 * acc;
      }
  return gamma;
}

}  // namespace

CurvatureEngine::CurvatureEngine(const MetricSource& source, const Chart& chart,
                                 StencilOptions opts)
    : source_(source), chart_(chart), opts_(opts) {
  if (source.dim() != chart.dim)
    throw BadParameterError("metric source dimension " + std::to_string(source.dim()) +
                            " does not match chart dimension " + std::to_string(chart.dim));
  if (opts_.order != 2 && opts_.order != 4)
    throw BadParameterError("stencil order must be 2 or 4, got " + std::to_string(opts_.order));
  analytic_ = opts_.use_analytic && source.has_derivatives();
  grid_locked_ = source.grid_lock() != nullptr;
  if (grid_locked_) {
    // Samples exist only on the node lattice, so differences must step in
    // whole spacings and cannot shrink toward a boundary.
    chart_ = *source.grid_lock();
    for (int a = 0; a < chart_.dim; ++a)
      if (!chart_.periodic[a])
        throw MissingDerivativesError(
            "grid metric has a non-periodic axis " + std::to_string(a) +
            "; curvature stencils would step off the sample lattice near the boundary");
  }
  default_step_ = chart_.min_spacing() / 2.0;
}

CurvatureEngine::AxisStencil CurvatureEngine::axis_stencil(const Vec& x, int axis,
                                                           double distance_scale) const {
  if (grid_locked_) return {opts_.order, chart_.spacing(axis)};
  if (chart_.periodic[axis]) return {opts_.order, default_step_};
  double d = std::min(x[axis] - chart_.lower[axis], chart_.upper[axis] - x[axis]);
  d *= distance_scale;
  if (d <= 0.0)
    throw BadParameterError("stencil center lies outside the open chart box on axis " +
                            std::to_string(axis));
  const double s = default_step_;
  if (opts_.order == 4 && 2.0 * s < d) return {4, s};
  if (s < d) return {2, s};
  return {2, d / 2.0};  // shrunken stencil strictly inside the box
}

CurvatureEngine::MetricJet CurvatureEngine::jet_at(const Vec& x) const {
  const int n = chart_.dim;
  MetricJet jet;
  jet.g = source_.metric_at(x);
  std::tie(jet.ginv, jet.density) = inverse_and_density(jet.g);
  if (analytic_) {
    jet.dg = source_.d_metric_at(x);
    jet.ddg = source_.dd_metric_at(x);
    return jet;
  }

  jet.dg.assign(std::size_t(n), Mat::Zero(n, n));
  jet.ddg.assign(std::size_t(n) * n, Mat::Zero(n, n));
  std::vector<AxisStencil> st(std::size_t(n), AxisStencil{});
  for (int a = 0; a < n; ++a) st[std::size_t(a)] = axis_stencil(x, a, 1.0);

  for (int a = 0; a < n; ++a) {
    const double s = st[std::size_t(a)].step;
    const int order = st[std::size_t(a)].order;
    Mat d1 = Mat::Zero(n, n);
    Mat d2 = Mat::Zero(n, n);
    // One metric evaluation per line offset serves both derivatives.
    const int reach = order == 4 ? 2 : 1;
    for (int off = -reach; off <= reach; ++off) {
      Mat m;
      if (off == 0) {
        m = jet.g;
      } else {
        Vec y = x;
        y[a] += off * s;
        m = source_.metric_at(y);
      }
      for (Tap t : first_taps(order))
        if (t.offset == off) d1 += t.coeff * m;
      for (Tap t : second_taps(order))
        if (t.offset == off) d2 += t.coeff * m;
    }
    jet.dg[std::size_t(a)] = d1 / s;
    jet.ddg[std::size_t(a) * n + a] = d2 / (s * s);
  }

  // Mixed partials as the tensor product of the two axes' first differences.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const AxisStencil& sa = st[std::size_t(a)];
      const AxisStencil& sb = st[std::size_t(b)];
      Mat acc = Mat::Zero(n, n);
      for (Tap ta : first_taps(sa.order))
        for (Tap tb : first_taps(sb.order)) {
          Vec y = x;
          y[a] += ta.offset * sa.step;
          y[b] += tb.offset * sb.step;
          acc += (ta.coeff * tb.coeff) * source_.metric_at(y);
        }
      acc /= sa.step * sb.step;
      jet.ddg[std::size_t(a) * n + b] = acc;
      jet.ddg[std::size_t(b) * n + a] = acc;
    }
  return jet;
}

Christoffel CurvatureEngine::christoffel(const Vec& x) const {
  MetricJet jet = jet_at(x);
  return christoffel_from(jet.ginv, jet.dg, chart_.dim);
}

CurvatureTensors CurvatureEngine::tensors_from_jet(const MetricJet& jet) const {
  const int n = chart_.dim;
  CurvatureTensors out;
  out.gamma = christoffel_from(jet.ginv, jet.dg, n);

  std::vector<Mat> dginv(std::size_t(n), Mat{});
  for (int a = 0; a < n; ++a)
    dginv[std::size_t(a)] = -jet.ginv * jet.dg[std::size_t(a)] * jet.ginv;

  // dgamma[((a k) i) j] = d_a Gamma^k_ij
  std::vector<double> dgamma(std::size_t(n) * n * n * n, 0.0);
  auto dgam = [&](int a, int k, int i, int j) -> double& {
    return dgamma[std::size_t(((a * n + k) * n + i) * n + j)];
  };
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
          double acc = 0.0;
          for (int l = 0; l < n; ++l) {
            acc += dginv[std::size_t(a)](k, l) *
                   (jet.dg[std::size_t(i)](j, l) + jet.dg[std::size_t(j)](i, l) -
                    jet.dg[std::size_t(l)](i, j));
            acc += jet.ginv(k, l) *
                   (jet.ddg[std::size_t(a) * n + i](j, l) + jet.ddg[std::size_t(a) * n + j](i, l) -
                    jet.ddg[std::size_t(a) * n + l](i, j));
          }
          dgam(a, k, i, j) = 0.5 * acc;
          dgam(a, k, j, i) = 0.5 * acc;
        }

  // R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik
  //           + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
  std::vector<double> rup(std::size_t(n) * n * n * n, 0.0);
  auto up = [&](int l, int k, int i, int j) -> double& {
    return rup[std::size_t(((l * n + k) * n + i) * n + j)];
  };
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          double acc = dgam(i, l, j, k) - dgam(j, l, i, k);
          for (int m = 0; m < n; ++m)
            acc += out.gamma(l, i, m) * out.gamma(m, j, k) -
                   out.gamma(l, j, m) * out.gamma(m, i, k);
          up(l, k, i, j) = acc;
          up(l, k, j, i) = -acc;  // antisymmetry in (i, j) is exact
        }

  out.riemann.n = n;
  out.riemann.v.assign(std::size_t(n) * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc += jet.g(l, m) * up(m, k, i, j);
          out.riemann.at(i, j, k, l) = acc;
        }

  out.ricci = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) acc += jet.ginv(i, m) * out.riemann(m, j, k, i);
      out.ricci(j, k) = acc;
    }
  out.kappa = (jet.ginv * out.ricci).trace();
  return out;
}

CurvatureTensors CurvatureEngine::riemann(const Vec& x) const {
  return tensors_from_jet(jet_at(x));
}

double CurvatureEngine::directional_derivative(const ScalarField& f, const Vec& x, int axis,
                                               double distance_scale) const {
  AxisStencil st = axis_stencil(x, axis, distance_scale);
  double acc = 0.0;
  for (Tap t : first_taps(st.order)) {
    Vec y = x;
    y[axis] += t.offset * st.step;
    acc += t.coeff * f(y);
  }
  return acc / st.step;
}

double CurvatureEngine::laplace_beltrami(const ScalarField& f, const Vec& x) const {
  const int n = chart_.dim;
  // Flux F_i(y) = sqrt(g) g^{ij} d_j f at y; Delta f = -(1/sqrt g) d_i F_i.
  // The outer stencil keeps half the boundary distance in reserve so the
  // inner gradient stencils still fit strictly inside the box.
  auto flux = [&](const Vec& y, int i) {
    auto [ginv, dens] = inverse_and_density(source_.metric_at(y));
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += ginv(i, j) * directional_derivative(f, y, j, 0.5);
    return dens * acc;
  };
  double div = 0.0;
  for (int i = 0; i < n; ++i) {
    AxisStencil st = axis_stencil(x, i, 0.5);
    for (Tap t : first_taps(st.order)) {
      Vec y = x;
      y[i] += t.offset * st.step;
      div += t.coeff * flux(y, i) / st.step;
    }
  }
  return -div / density(source_.metric_at(x));
}

double CurvatureEngine::laplacian_kappa(const Vec& x) const {
  return laplace_beltrami([this](const Vec& z) { return riemann(z).kappa; }, x);
}

CurvaturePoint CurvatureEngine::curvature_point(const Vec& x) const {
  const int n = chart_.dim;
  MetricJet jet = jet_at(x);
  CurvatureTensors t = tensors_from_jet(jet);

  CurvaturePoint p;
  p.dim = n;
  p.gamma = std::move(t.gamma);
  p.riemann = std::move(t.riemann);
  p.ricci = t.ricci;
  p.kappa = t.kappa;
  p.density = jet.density;

  Mat ricci_up = jet.ginv * p.ricci * jet.ginv;
  p.ricci_norm2 = ricci_up.cwiseProduct(p.ricci).sum();

  // |R|^2 by raising one index per pass; keeps the contraction at O(n^5).
  std::vector<double> raised = p.riemann.v;
  for (int pos = 0; pos < 4; ++pos) {
    std::vector<double> next(raised.size(), 0.0);
    int idx[4];
    for (idx[0] = 0; idx[0] < n; ++idx[0])
      for (idx[1] = 0; idx[1] < n; ++idx[1])
        for (idx[2] = 0; idx[2] < n; ++idx[2])
          for (idx[3] = 0; idx[3] < n; ++idx[3]) {
            double acc = 0.0;
            int src[4] = {idx[0], idx[1], idx[2], idx[3]};
            for (int m = 0; m < n; ++m) {
              src[pos] = m;
              acc += jet.ginv(idx[pos], m) *
                     raised[std::size_t(((src[0] * n + src[1]) * n + src[2]) * n + src[3])];
            }
            next[std::size_t(((idx[0] * n + idx[1]) * n + idx[2]) * n + idx[3])] = acc;
          }
    raised = std::move(next);
  }
  p.riemann_norm2 = 0.0;
  for (std::size_t i = 0; i < raised.size(); ++i) p.riemann_norm2 += raised[i] * p.riemann.v[i];

  p.lap_kappa = laplacian_kappa(x);
  return p;
}

}  // namespace lovol
