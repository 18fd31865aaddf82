#pragma once

#include <functional>
#include <vector>

#include "lovol/chart.hpp"
#include "lovol/types.hpp"

namespace lovol {

struct StencilOptions {
  int order = 4;             // central-difference order, 2 or 4
  bool use_analytic = true;  // prefer exact source derivatives when available
};

// Christoffel symbols of the second kind, Gamma^k_ij, symmetric in (i, j).
struct Christoffel {
  int n = 0;
  std::vector<double> v;  // [k][i][j]

  double operator()(int k, int i, int j) const { return v[std::size_t((k * n + i) * n + j)]; }
  double& at(int k, int i, int j) { return v[std::size_t((k * n + i) * n + j)]; }
};

// Fully lowered curvature tensor R_ijkl = <R(d_i, d_j) d_k, d_l> with
// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]; this sign makes
// the scalar curvature of the round n-sphere +n(n-1)/r^2.
struct Riemann4 {
  int n = 0;
  std::vector<double> v;  // [i][j][k][l]

  double operator()(int i, int j, int k, int l) const {
    return v[std::size_t(((i * n + j) * n + k) * n + l)];
  }
  double& at(int i, int j, int k, int l) {
    return v[std::size_t(((i * n + j) * n + k) * n + l)];
  }
};

struct CurvatureTensors {
  Christoffel gamma;
  Riemann4 riemann;
  Mat ricci;        // rho_jk = R^i_jki
  double kappa = 0; // rho^j_j
};

// Everything the local invariants need at one node.
struct CurvaturePoint {
  int dim = 0;
  Christoffel gamma;
  Riemann4 riemann;
  Mat ricci;
  double kappa = 0;
  double ricci_norm2 = 0;    // rho^jk rho_jk
  double riemann_norm2 = 0;  // R^ijkl R_ijkl
  double lap_kappa = 0;      // Delta_g kappa, nonnegative-operator sign
  double density = 0;        // sqrt(det g)
};

using ScalarField = std::function<double(const Vec&)>;

// Pointwise differential geometry over one metric source and chart. All
// methods are const and safe to call concurrently.
class CurvatureEngine {
 public:
  CurvatureEngine(const MetricSource& source, const Chart& chart, StencilOptions opts = {});

  // Gamma^k_ij = (1/2) g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
  Christoffel christoffel(const Vec& x) const;

  // Curvature tensor, Ricci tensor and scalar curvature at x.
  CurvatureTensors riemann(const Vec& x) const;

  double scalar_curvature(const Vec& x) const { return riemann(x).kappa; }

  // Delta_g f = -(1/sqrt g) d_i (sqrt g g^{ij} d_j f), nested central
  // differences of the field.
  double laplace_beltrami(const ScalarField& f, const Vec& x) const;

  double laplacian_kappa(const Vec& x) const;

  CurvaturePoint curvature_point(const Vec& x) const;

  bool analytic_path() const { return analytic_; }

 private:
  struct MetricJet {
    Mat g;
    Mat ginv;
    double density = 0;
    std::vector<Mat> dg;   // dg[a]
    std::vector<Mat> ddg;  // ddg[a*n+b]
  };
  struct AxisStencil {
    int order;
    double step;
  };

  MetricJet jet_at(const Vec& x) const;
  AxisStencil axis_stencil(const Vec& x, int axis, double distance_scale) const;
  CurvatureTensors tensors_from_jet(const MetricJet& jet) const;
  double directional_derivative(const ScalarField& f, const Vec& x, int axis,
                                double distance_scale) const;

  const MetricSource& source_;
  Chart chart_;
  StencilOptions opts_;
  bool analytic_;
  bool grid_locked_;
  double default_step_;
};

}  // namespace lovol
