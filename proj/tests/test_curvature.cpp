#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "lovol/catalog.hpp"
#include "lovol/curvature.hpp"
#include "lovol/errors.hpp"
#include "test_sources.hpp"

using namespace lovol;

namespace {
constexpr double kPi = std::numbers::pi;

struct ConstSource final : MetricSource {
  explicit ConstSource(Mat m) : g(std::move(m)) {}
  int dim() const override { return int(g.rows()); }
  Mat metric_at(const Vec&) const override { return g; }
  Mat g;
};

double max_abs_component(const Riemann4& r) {
  double m = 0.0;
  for (double v : r.v) m = std::max(m, std::abs(v));
  return m;
}

// Worst violations of the algebraic curvature symmetries, normalized later
// by the largest component.
struct SymmetryViolations {
  double antisym_ij = 0;   // R_ijkl + R_jikl
  double antisym_kl = 0;   // R_ijkl + R_ijlk
  double pair = 0;         // R_ijkl - R_klij
  double bianchi = 0;      // R_ijkl + R_jkil + R_kijl
};

SymmetryViolations symmetry_violations(const Riemann4& r) {
  SymmetryViolations v;
  const int n = r.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          v.antisym_ij = std::max(v.antisym_ij, std::abs(r(i, j, k, l) + r(j, i, k, l)));
          v.antisym_kl = std::max(v.antisym_kl, std::abs(r(i, j, k, l) + r(i, j, l, k)));
          v.pair = std::max(v.pair, std::abs(r(i, j, k, l) - r(k, l, i, j)));
          v.bianchi = std::max(
              v.bianchi, std::abs(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)));
        }
  return v;
}
}  // namespace

TEST_CASE("round 2-sphere Christoffel symbols, analytic path") {
  auto m = lovol::sphere(2, 1.0);
  CurvatureEngine eng(*m.source, m.chart);
  CHECK(eng.analytic_path());
  Vec x(2);
  x << 1.1, 2.3;  // (theta, phi)
  Christoffel g = eng.christoffel(x);
  CHECK(g(0, 1, 1) == doctest::Approx(-std::sin(1.1) * std::cos(1.1)).epsilon(1e-12));
  CHECK(g(1, 0, 1) == doctest::Approx(std::cos(1.1) / std::sin(1.1)).epsilon(1e-12));
  CHECK(g(1, 1, 0) == g(1, 0, 1));
  CHECK(g(0, 0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g(1, 0, 0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("round spheres: kappa, |Ric|^2, |R|^2, Delta kappa") {
  for (int n = 2; n <= 6; ++n) {
    for (double r : {1.0, 2.0}) {
      auto m = lovol::sphere(n, r);
      CurvatureEngine eng(*m.source, m.chart);
      CurvaturePoint p = eng.curvature_point(m.chart.center());
      const double r2 = r * r, r4 = r2 * r2;
      const double kappa = n * (n - 1.0) / r2;
      CAPTURE(n);
      CAPTURE(r);
      CHECK(p.kappa == doctest::Approx(kappa).epsilon(1e-10));
      CHECK(p.ricci_norm2 == doctest::Approx(n * (n - 1.0) * (n - 1.0) / r4).epsilon(1e-10));
      CHECK(p.riemann_norm2 == doctest::Approx(2.0 * n * (n - 1.0) / r4).epsilon(1e-10));
      // kappa is constant, so its Laplacian is pure stencil noise
      CHECK(std::abs(p.lap_kappa) <= 1e-8 * kappa);
    }
  }
}

TEST_CASE("flat metrics have zero curvature") {
  // finite-difference path: constant metric leaves only tap-cancellation
  // roundoff (the 1/12-weighted taps do not cancel bitwise)
  Mat g = Mat::Zero(3, 3);
  g.diagonal() << 4.0, 9.0, 1.0;
  ConstSource src(g);
  Chart c = lovol::testing::periodic_box(3, 8);
  CurvatureEngine eng(src, c);
  CHECK(!eng.analytic_path());
  CurvaturePoint p = eng.curvature_point(c.node(11));
  CHECK(std::abs(p.kappa) <= 1e-12);
  CHECK(p.ricci_norm2 <= 1e-24);
  CHECK(p.riemann_norm2 <= 1e-24);
  for (double v : p.riemann.v) CHECK(std::abs(v) <= 1e-12);
  CHECK(p.density == doctest::Approx(6.0).epsilon(1e-15));

  // analytic path: the zero derivative jet makes everything exactly zero
  auto t = lovol::flat_torus({1.0, 2.0, 3.0});
  CurvatureEngine teng(*t.source, t.chart);
  CHECK(teng.scalar_curvature(t.chart.center()) == 0.0);
}

TEST_CASE("product metric adds scalar curvatures blockwise") {
  auto prod = lovol::product({lovol::sphere(2, 1.0), lovol::flat_torus({2.0, 3.0})});
  CurvatureEngine eng(*prod.source, prod.chart);
  Vec x = prod.chart.center();
  CHECK(eng.scalar_curvature(x) == doctest::Approx(2.0).epsilon(1e-10));
  CurvaturePoint p = eng.curvature_point(x);
  // S^2 x T^2 invariants equal the S^2 ones; the flat block contributes 0
  CHECK(p.ricci_norm2 == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(p.riemann_norm2 == doctest::Approx(4.0).epsilon(1e-10));
  // cross-block components vanish
  CHECK(p.riemann(0, 2, 0, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.ricci(0, 3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("finite differences agree with analytic derivatives") {
  SUBCASE("round spheres, interior point") {
    for (int n : {2, 3}) {
      auto m = lovol::sphere(n, 1.0);
      StencilOptions fd;
      fd.use_analytic = false;
      CurvatureEngine exact(*m.source, m.chart);
      CurvatureEngine approx(*m.source, m.chart, fd);
      CHECK(!approx.analytic_path());
      Vec x = m.chart.center();
      CHECK(approx.scalar_curvature(x) ==
            doctest::Approx(exact.scalar_curvature(x)).epsilon(1e-4));
    }
  }
  SUBCASE("perturbed flat metrics, componentwise") {
    for (unsigned seed : {1u, 2u, 3u}) {
      lovol::testing::PerturbedFlatSource src(3, seed);
      Chart c = lovol::testing::periodic_box(3, 32);
      StencilOptions fd;
      fd.use_analytic = false;
      CurvatureEngine exact(src, c);
      CurvatureEngine approx(src, c, fd);
      Vec x = c.node(7 + 32 * 5);
      CurvatureTensors te = exact.riemann(x);
      CurvatureTensors ta = approx.riemann(x);
      CAPTURE(seed);
      CHECK(std::abs(ta.kappa - te.kappa) <= 2e-3);
      const double scale = std::max(0.1, max_abs_component(te.riemann));
      for (std::size_t q = 0; q < te.riemann.v.size(); ++q)
        CHECK(std::abs(ta.riemann.v[q] - te.riemann.v[q]) <= 2e-3 * scale);
    }
  }
}

TEST_CASE("curvature symmetries") {
  SUBCASE("analytic path: all four identities at roundoff") {
    lovol::testing::PerturbedFlatSource src(3, 42);
    Chart c = lovol::testing::periodic_box(3, 16);
    CurvatureEngine eng(src, c);
    for (std::int64_t node : {0, 100, 2100}) {
      Riemann4 r = eng.riemann(c.node(node)).riemann;
      const double scale = std::max(1e-12, max_abs_component(r));
      SymmetryViolations v = symmetry_violations(r);
      CHECK(v.antisym_ij <= 1e-12 * scale);
      CHECK(v.bianchi <= 1e-12 * scale);
      CHECK(v.antisym_kl <= 1e-12 * scale);
      CHECK(v.pair <= 1e-12 * scale);
    }
  }
  SUBCASE("finite differences: all four identities hold at roundoff") {
    // The Christoffel derivative is taken analytically from the sampled jet,
    // so metric compatibility holds algebraically and even the
    // metric-dependent identities survive the stencil error.
    lovol::testing::PerturbedFlatSource src(2, 9);
    StencilOptions fd;
    fd.use_analytic = false;
    for (int res : {16, 32}) {
      Chart c = lovol::testing::periodic_box(2, res);
      CurvatureEngine eng(src, c, fd);
      Riemann4 r = eng.riemann(c.center()).riemann;
      const double scale = std::max(1e-12, max_abs_component(r));
      SymmetryViolations v = symmetry_violations(r);
      CHECK(v.antisym_ij <= 1e-13 * scale);
      CHECK(v.bianchi <= 1e-13 * scale);
      CHECK(v.antisym_kl <= 1e-11 * scale);
      CHECK(v.pair <= 1e-11 * scale);
    }
  }
}

TEST_CASE("Laplace-Beltrami operator") {
  SUBCASE("flat torus eigenfunction") {
    auto t = lovol::flat_torus({2.0 * kPi, 2.0 * kPi}, 64);
    CurvatureEngine eng(*t.source, t.chart);
    ScalarField f = [](const Vec& x) { return std::cos(x[0]); };
    Vec x(2);
    x << 0.7, 1.9;
    // Delta cos(x0) = cos(x0) with the nonnegative-operator sign
    CHECK(eng.laplace_beltrami(f, x) == doctest::Approx(std::cos(0.7)).epsilon(1e-5));
  }
  SUBCASE("flat quadratic is differenced exactly") {
    Mat g = Mat::Identity(2, 2);
    ConstSource src(g);
    Vec lo = Vec::Zero(2), up(2);
    up << 4.0, 4.0;
    IVec res(2);
    res << 32, 32;
    Chart c(lo, up, res, {false, false});
    CurvatureEngine eng(src, c);
    ScalarField f = [](const Vec& x) { return x[0] * x[0]; };
    Vec x(2);
    x << 2.0, 2.0;
    CHECK(eng.laplace_beltrami(f, x) == doctest::Approx(-2.0).epsilon(1e-10));
    // near-boundary evaluation falls back to shrunken stencils, stays finite
    Vec edge(2);
    edge << 0.05, 2.0;
    const double v = eng.laplace_beltrami(f, edge);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(-2.0).epsilon(1e-6));
  }
  SUBCASE("sphere zonal eigenfunction") {
    auto m = lovol::sphere(2, 1.0);
    CurvatureEngine eng(*m.source, m.chart);
    ScalarField f = [](const Vec& x) { return std::cos(x[0]); };
    Vec x(2);
    x << 1.0, kPi;
    // cos(theta) is the l = 1 zonal harmonic: Delta f = 2 f
    CHECK(eng.laplace_beltrami(f, x) == doctest::Approx(2.0 * std::cos(1.0)).epsilon(1e-4));
    CHECK(std::abs(eng.laplacian_kappa(x)) <= 1e-8);
  }
}

TEST_CASE("second-order stencils work but converge slower") {
  lovol::testing::PerturbedFlatSource src(2, 5);
  Chart c = lovol::testing::periodic_box(2, 32);
  StencilOptions o2;
  o2.order = 2;
  o2.use_analytic = false;
  StencilOptions o4;
  o4.use_analytic = false;
  CurvatureEngine exact(src, c);
  CurvatureEngine e2(src, c, o2);
  CurvatureEngine e4(src, c, o4);
  double err2 = 0.0, err4 = 0.0;
  for (std::int64_t node : {3, 200, 517, 701, 940}) {
    Vec x = c.node(node);
    const double truth = exact.scalar_curvature(x);
    err2 = std::max(err2, std::abs(e2.scalar_curvature(x) - truth));
    err4 = std::max(err4, std::abs(e4.scalar_curvature(x) - truth));
  }
  CHECK(err4 < err2);
  CHECK(err2 < 1e-2);
}

TEST_CASE("grid-locked sources difference on the sample lattice") {
  lovol::testing::PerturbedFlatSource src(2, 13);
  Chart c = lovol::testing::periodic_box(2, 32);
  GridMetricSource grid(sample(src, c));
  CurvatureEngine from_grid(grid, c);
  CurvatureEngine exact(src, c);
  Vec x = c.node(5 + 32 * 9);
  // full-spacing steps instead of half-spacing: still 4th order accurate
  CHECK(std::abs(from_grid.scalar_curvature(x) - exact.scalar_curvature(x)) <= 1e-2);
}

TEST_CASE("curvature engine rejects bad configurations") {
  Mat g = Mat::Identity(2, 2);
  ConstSource src(g);
  Chart c2 = lovol::testing::periodic_box(2, 8);
  Chart c3 = lovol::testing::periodic_box(3, 8);
  CHECK_THROWS_AS(CurvatureEngine(src, c3), BadParameterError);
  StencilOptions bad;
  bad.order = 3;
  CHECK_THROWS_AS(CurvatureEngine(src, c2, bad), BadParameterError);

  // grid lock on a non-periodic chart: stencils would leave the lattice
  Vec lo = Vec::Zero(2), up(2);
  up << 1.0, 1.0;
  IVec res(2);
  res << 8, 8;
  Chart open(lo, up, res, {false, true});
  GridMetricSource grid(sample(src, open));
  CHECK_THROWS_AS(CurvatureEngine(grid, open), MissingDerivativesError);

  // stencil centers must lie inside open non-periodic boxes
  CurvatureEngine eng(src, open);
  Vec outside(2);
  outside << 1.5, 0.5;
  CHECK_THROWS_AS(eng.christoffel(outside), BadParameterError);
}
