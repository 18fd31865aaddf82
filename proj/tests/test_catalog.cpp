#include <cmath>
#include <numbers>

#include <doctest.h>

#include "lovol/catalog.hpp"
#include "lovol/curvature.hpp"
#include "lovol/errors.hpp"
#include "lovol/quadrature.hpp"

using namespace lovol;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("flat torus chart and reference data") {
  auto t = flat_torus({1.0, 2.5, 4.0});
  CHECK(t.chart.dim == 3);
  CHECK(t.chart.homogeneous);
  REQUIRE(t.chart.exact_volume.has_value());
  CHECK(*t.chart.exact_volume == doctest::Approx(10.0).epsilon(1e-15));
  for (int a = 0; a < 3; ++a) {
    CHECK(t.chart.periodic[std::size_t(a)]);
    CHECK(t.chart.lower[a] == 0.0);
  }
  CHECK(t.chart.upper[2] == 4.0);
  REQUIRE(t.reference.has_value());
  CHECK(t.reference->kappa == 0.0);
  CHECK(t.reference->riemann_norm2 == 0.0);
  CHECK(t.reference->volume == doctest::Approx(10.0));
  CHECK(t.source->has_derivatives());
  CHECK(t.name.find("torus") != std::string::npos);

  CHECK_THROWS_AS(flat_torus({}), BadParameterError);
  CHECK_THROWS_AS(flat_torus({1.0, -2.0}), BadParameterError);
  CHECK_THROWS_AS(flat_torus({1.0}, 2), BadParameterError);
}

TEST_CASE("sphere volumes in closed form") {
  CHECK(sphere_volume(1, 1.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(2, 1.0) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(3, 1.0) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
  CHECK(sphere_volume(4, 1.0) == doctest::Approx(8.0 * kPi * kPi / 3.0).epsilon(1e-15));
  CHECK(sphere_volume(5, 1.0) == doctest::Approx(kPi * kPi * kPi).epsilon(1e-15));
  CHECK(sphere_volume(6, 1.0) == doctest::Approx(16.0 * std::pow(kPi, 3) / 15.0).epsilon(1e-15));
  CHECK(sphere_volume(2, 3.0) == doctest::Approx(36.0 * kPi).epsilon(1e-15));
}

TEST_CASE("sphere chart geometry and references") {
  auto s = sphere(4, 2.0);
  CHECK(s.chart.dim == 4);
  CHECK(s.chart.homogeneous);
  CHECK(*s.chart.exact_volume == doctest::Approx(sphere_volume(4, 2.0)).epsilon(1e-15));
  for (int a = 0; a < 3; ++a) {
    CHECK(s.chart.lower[a] == 0.0);
    CHECK(s.chart.upper[a] == doctest::Approx(kPi));
    CHECK(!s.chart.periodic[std::size_t(a)]);
  }
  CHECK(s.chart.upper[3] == doctest::Approx(2.0 * kPi));
  CHECK(s.chart.periodic[3]);
  CHECK(s.chart.resolution[0] == default_sphere_resolution(4));
  REQUIRE(s.reference.has_value());
  CHECK(s.reference->kappa == doctest::Approx(12.0 / 4.0).epsilon(1e-15));
  CHECK(s.reference->ricci_norm2 == doctest::Approx(36.0 / 16.0).epsilon(1e-15));
  CHECK(s.reference->riemann_norm2 == doctest::Approx(24.0 / 16.0).epsilon(1e-15));
  CHECK(s.reference->lap_kappa == 0.0);

  auto fine = sphere(2, 1.0, 128);
  CHECK(fine.chart.resolution[0] == 128);

  // the circle S^1 degenerates to a flat periodic chart but stays valid
  auto circle = sphere(1, 3.0);
  CHECK(circle.chart.dim == 1);
  CHECK(circle.chart.periodic[0]);
  CHECK(*circle.chart.exact_volume == doctest::Approx(6.0 * kPi).epsilon(1e-14));

  CHECK_THROWS_AS(sphere(2, 0.0), BadParameterError);
  CHECK_THROWS_AS(sphere(2, -1.0), BadParameterError);
  CHECK_THROWS_AS(sphere(9, 1.0), BadParameterError);  // beyond the dim cap
}

TEST_CASE("sphere metric matches the hyperspherical line element") {
  auto s = sphere(3, 2.0);
  Vec x(3);
  x << 0.9, 1.7, 0.4;
  Mat g = s.source->metric_at(x);
  CHECK(g(0, 0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(g(1, 1) == doctest::Approx(4.0 * std::pow(std::sin(0.9), 2)).epsilon(1e-14));
  CHECK(g(2, 2) ==
        doctest::Approx(4.0 * std::pow(std::sin(0.9) * std::sin(1.7), 2)).epsilon(1e-14));
  CHECK(g(0, 1) == 0.0);
  CHECK(g(1, 2) == 0.0);
}

TEST_CASE("curvature engine reproduces catalog references") {
  for (int n = 2; n <= 6; ++n) {
    auto s = sphere(n, 1.0, 32);
    CurvatureEngine eng(*s.source, s.chart);
    CurvaturePoint p = eng.curvature_point(s.chart.center());
    CAPTURE(n);
    CHECK(std::abs(p.kappa - s.reference->kappa) <= 1e-6);
    CHECK(std::abs(p.ricci_norm2 - s.reference->ricci_norm2) <= 1e-6);
    CHECK(std::abs(p.riemann_norm2 - s.reference->riemann_norm2) <= 1e-6);
  }
}

TEST_CASE("quadrature volume agrees with the exact volume") {
  SUBCASE("spheres") {
    for (int n : {2, 3}) {
      auto s = sphere(n, 1.0, 32);
      QuadratureOptions opts;
      opts.force_quadrature = true;
      IntegralResult r = integrate(
          s.chart, [](const Vec&) { return 1.0; },
          [&](const Vec& x) { return density(s.source->metric_at(x)); }, opts);
      CAPTURE(n);
      CHECK(std::abs(r.value - *s.chart.exact_volume) <= 1e-3 * *s.chart.exact_volume);
    }
  }
  SUBCASE("torus, exact") {
    auto t = flat_torus({2.0, 3.0});
    QuadratureOptions opts;
    opts.force_quadrature = true;
    IntegralResult r = integrate(
        t.chart, [](const Vec&) { return 1.0; },
        [&](const Vec& x) { return density(t.source->metric_at(x)); }, opts);
    CHECK(r.value == doctest::Approx(6.0).epsilon(1e-14));
  }
}

TEST_CASE("products concatenate charts and add references") {
  auto p = product({sphere(2, 1.0), flat_torus({2.0, 3.0})});
  CHECK(p.chart.dim == 4);
  CHECK(p.chart.homogeneous);
  CHECK(*p.chart.exact_volume == doctest::Approx(4.0 * kPi * 6.0).epsilon(1e-14));
  CHECK(!p.chart.periodic[0]);
  CHECK(p.chart.periodic[1]);  // sphere azimuth
  CHECK(p.chart.periodic[2]);
  CHECK(p.chart.periodic[3]);
  CHECK(p.name.find("product") != std::string::npos);
  REQUIRE(p.reference.has_value());
  CHECK(p.reference->kappa == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.reference->ricci_norm2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.reference->riemann_norm2 == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(p.reference->volume == doctest::Approx(4.0 * kPi * 6.0).epsilon(1e-14));

  // block-diagonal metric with factor blocks in order
  Vec x = p.chart.center();
  Mat g = p.source->metric_at(x);
  CHECK(g(0, 0) == doctest::Approx(1.0));
  CHECK(g(1, 1) == doctest::Approx(std::pow(std::sin(x[0]), 2)).epsilon(1e-14));
  CHECK(g(2, 2) == doctest::Approx(1.0));
  CHECK(g(3, 3) == doctest::Approx(1.0));
  CHECK(g(0, 2) == 0.0);
  CHECK(p.source->has_derivatives());

  CHECK_THROWS_AS(product({}), BadParameterError);
  // dimension cap applies to the concatenated chart
  CHECK_THROWS_AS(product({sphere(6, 1.0), sphere(6, 1.0)}), BadParameterError);
}

TEST_CASE("default sphere resolutions shrink with dimension") {
  CHECK(default_sphere_resolution(2) == 64);
  CHECK(default_sphere_resolution(3) == 64);
  CHECK(default_sphere_resolution(4) == 48);
  CHECK(default_sphere_resolution(5) == 28);
  CHECK(default_sphere_resolution(6) == 24);
  // even the coarsest default resolves the midpoint model below 1e-3
  for (int n = 2; n <= 6; ++n) {
    const int res = default_sphere_resolution(n);
    CHECK((kPi / res) * (kPi / res) / 24.0 < 1e-3);
  }
}
