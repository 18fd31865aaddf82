#include "lovol/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "lovol/coefficients.hpp"
#include "lovol/errors.hpp"

namespace lovol {
namespace {

constexpr double kPi = std::numbers::pi;

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class TorusSource final : public MetricSource {
 public:
  explicit TorusSource(int n) : n_(n) {}
  int dim() const override { return n_; }
  Mat metric_at(const Vec&) const override { return Mat::Identity(n_, n_); }
  bool has_derivatives() const override { return true; }
  std::vector<Mat> d_metric_at(const Vec&) const override {
    return std::vector<Mat>(std::size_t(n_), Mat::Zero(n_, n_));
  }
  std::vector<Mat> dd_metric_at(const Vec&) const override {
    return std::vector<Mat>(std::size_t(n_) * n_, Mat::Zero(n_, n_));
  }

 private:
  int n_;
};

// Hyperspherical metric on S^n(r): g is diagonal with
//   g_00 = r^2,  g_jj = r^2 prod_{i<j} sin^2(x_i).
class SphereSource final : public MetricSource {
 public:
  SphereSource(int n, double r) : n_(n), r2_(r * r) {}
  int dim() const override { return n_; }

  Mat metric_at(const Vec& x) const override {
    Mat g = Mat::Zero(n_, n_);
    double cum = r2_;
    for (int j = 0; j < n_; ++j) {
      g(j, j) = cum;
      if (j + 1 < n_) {
        const double s = std::sin(x[j]);
        cum *= s * s;
      }
    }
    return g;
  }

  bool has_derivatives() const override { return true; }

  std::vector<Mat> d_metric_at(const Vec& x) const override {
    const Mat g = metric_at(x);
    std::vector<Mat> dg(std::size_t(n_), Mat::Zero(n_, n_));
    for (int a = 0; a + 1 < n_; ++a) {
      const double cot = std::cos(x[a]) / std::sin(x[a]);
      for (int j = a + 1; j < n_; ++j) dg[std::size_t(a)](j, j) = 2.0 * cot * g(j, j);
    }
    return dg;
  }

  std::vector<Mat> dd_metric_at(const Vec& x) const override {
    const Mat g = metric_at(x);
    std::vector<Mat> ddg(std::size_t(n_) * n_, Mat::Zero(n_, n_));
    for (int a = 0; a + 1 < n_; ++a) {
      const double sa = std::sin(x[a]);
      const double cota = std::cos(x[a]) / sa;
      // d_a d_a (sin^2 x_a) / sin^2 x_a = 2 cos(2 x_a) / sin^2 x_a
      const double curv = 2.0 * std::cos(2.0 * x[a]) / (sa * sa);
      for (int j = a + 1; j < n_; ++j) ddg[std::size_t(a) * n_ + a](j, j) = curv * g(j, j);
      for (int b = a + 1; b + 1 < n_; ++b) {
        const double cotb = std::cos(x[b]) / std::sin(x[b]);
        for (int j = b + 1; j < n_; ++j) {
          const double v = 4.0 * cota * cotb * g(j, j);
          ddg[std::size_t(a) * n_ + b](j, j) = v;
          ddg[std::size_t(b) * n_ + a](j, j) = v;
        }
      }
    }
    return ddg;
  }

 private:
  int n_;
  double r2_;
};

class ProductSource final : public MetricSource {
 public:
  explicit ProductSource(std::vector<std::shared_ptr<const MetricSource>> factors)
      : factors_(std::move(factors)) {
    offsets_.push_back(0);
    for (const auto& f : factors_) offsets_.push_back(offsets_.back() + f->dim());
  }

  int dim() const override { return offsets_.back(); }

  Mat metric_at(const Vec& x) const override {
    const int n = dim();
    Mat g = Mat::Zero(n, n);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const int off = offsets_[f], d = factors_[f]->dim();
      g.block(off, off, d, d) = factors_[f]->metric_at(x.segment(off, d));
    }
    return g;
  }

  bool has_derivatives() const override {
    for (const auto& f : factors_)
      if (!f->has_derivatives()) return false;
    return true;
  }

  std::vector<Mat> d_metric_at(const Vec& x) const override {
    const int n = dim();
    std::vector<Mat> dg(std::size_t(n), Mat::Zero(n, n));
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const int off = offsets_[f], d = factors_[f]->dim();
      auto local = factors_[f]->d_metric_at(x.segment(off, d));
      for (int a = 0; a < d; ++a)
        dg[std::size_t(off + a)].block(off, off, d, d) = local[std::size_t(a)];
    }
    return dg;
  }

  std::vector<Mat> dd_metric_at(const Vec& x) const override {
    const int n = dim();
    std::vector<Mat> ddg(std::size_t(n) * n, Mat::Zero(n, n));
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const int off = offsets_[f], d = factors_[f]->dim();
      auto local = factors_[f]->dd_metric_at(x.segment(off, d));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          ddg[std::size_t(off + a) * n + (off + b)].block(off, off, d, d) =
              local[std::size_t(a) * d + b];
    }
    return ddg;
  }

 private:
  std::vector<std::shared_ptr<const MetricSource>> factors_;
  std::vector<int> offsets_;
};

}  // namespace

double sphere_volume(int n, double radius) {
  // 2 pi^{(n+1)/2} r^n / Gamma((n+1)/2)
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) * std::pow(radius, n) /
         gamma_half(HalfInteger{n + 1});
}

int default_sphere_resolution(int n) {
  if (n <= 3) return 64;
  if (n == 4) return 48;
  if (n == 5) return 28;
  if (n == 6) return 24;
  return 12;
}

CatalogManifold flat_torus(const std::vector<double>& sides, int resolution) {
  const int n = int(sides.size());
  if (n < 1 || n > kMaxDim)
    throw BadParameterError("flat torus needs between 1 and " + std::to_string(kMaxDim) +
                            " side lengths, got " + std::to_string(n));
  for (double L : sides)
    if (!(L > 0.0)) throw BadParameterError("torus side lengths must be positive");

  Vec lower = Vec::Zero(n), upper(n);
  IVec res(n);
  double vol = 1.0;
  for (int a = 0; a < n; ++a) {
    upper[a] = sides[std::size_t(a)];
    res[a] = resolution;
    vol *= sides[std::size_t(a)];
  }
  CatalogManifold m;
  m.name = "flat_torus(";
  for (int a = 0; a < n; ++a) m.name += (a ? ", " : "") + format_param(sides[std::size_t(a)]);
  m.name += ")";
  m.chart = Chart(lower, upper, res, std::vector<bool>(std::size_t(n), true), true, vol);
  m.source = std::make_shared<TorusSource>(n);
  m.reference = ReferenceConstants{0.0, 0.0, 0.0, 0.0, vol};
  return m;
}

CatalogManifold sphere(int n, double radius, int resolution) {
  if (n < 1 || n > kMaxDim)
    throw BadParameterError("sphere dimension must be between 1 and " + std::to_string(kMaxDim));
  if (!(radius > 0.0)) throw BadParameterError("sphere radius must be positive");
  if (resolution == 0) resolution = default_sphere_resolution(n);

  Vec lower = Vec::Zero(n), upper(n);
  IVec res(n);
  std::vector<bool> periodic(std::size_t(n), false);
  for (int a = 0; a < n; ++a) {
    upper[a] = (a + 1 < n) ? kPi : 2.0 * kPi;
    res[a] = resolution;
  }
  periodic[std::size_t(n - 1)] = true;  // azimuthal axis

  const double r2 = radius * radius;
  const double r4 = r2 * r2;
  CatalogManifold m;
  m.name = "sphere(" + std::to_string(n) + ", " + format_param(radius) + ")";
  m.chart = Chart(lower, upper, res, periodic, true, sphere_volume(n, radius));
  m.source = std::make_shared<SphereSource>(n, radius);
  m.reference = ReferenceConstants{n * (n - 1) / r2, double(n) * (n - 1) * (n - 1) / r4,
                                   2.0 * n * (n - 1) / r4, 0.0, sphere_volume(n, radius)};
  return m;
}

CatalogManifold product(const std::vector<CatalogManifold>& factors) {
  if (factors.empty()) throw BadParameterError("product needs at least one factor");
  int n = 0;
  for (const auto& f : factors) n += f.chart.dim;
  if (n > kMaxDim)
    throw BadParameterError("product dimension " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kMaxDim));

  Vec lower(n), upper(n);
  IVec res(n);
  std::vector<bool> periodic(std::size_t(n), false);
  bool homogeneous = true;
  std::optional<double> vol = 1.0;
  std::optional<ReferenceConstants> ref = ReferenceConstants{};
  std::vector<std::shared_ptr<const MetricSource>> sources;
  std::string name = "product(";

  int off = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const CatalogManifold& fac = factors[f];
    const int d = fac.chart.dim;
    for (int a = 0; a < d; ++a) {
      lower[off + a] = fac.chart.lower[a];
      upper[off + a] = fac.chart.upper[a];
      res[off + a] = fac.chart.resolution[a];
      periodic[std::size_t(off + a)] = fac.chart.periodic[std::size_t(a)];
    }
    homogeneous = homogeneous && fac.chart.homogeneous;
    if (vol && fac.chart.exact_volume)
      *vol *= *fac.chart.exact_volume;
    else
      vol.reset();
    if (ref && fac.reference) {
      // Block-diagonal curvature: kappa and the squared norms add.
      ref->kappa += fac.reference->kappa;
      ref->ricci_norm2 += fac.reference->ricci_norm2;
      ref->riemann_norm2 += fac.reference->riemann_norm2;
      ref->lap_kappa += fac.reference->lap_kappa;
    } else {
      ref.reset();
    }
    sources.push_back(fac.source);
    name += (f ? ", " : "") + fac.name;
    off += d;
  }
  name += ")";
  if (ref && vol) ref->volume = *vol;
  if (!vol) ref.reset();

  CatalogManifold m;
  m.name = std::move(name);
  m.chart = Chart(lower, upper, res, periodic, homogeneous, vol);
  m.source = std::make_shared<ProductSource>(std::move(sources));
  m.reference = ref;
  return m;
}

}  // namespace lovol
