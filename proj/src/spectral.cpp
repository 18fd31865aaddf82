#include "lovol/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lovol/coefficients.hpp"
#include "lovol/errors.hpp"
#include "lovol/parallel.hpp"
#include "lovol/types.hpp"

namespace lovol {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// -ln(1e-16): a mode with t * lambda past this is below double precision.
constexpr double kLogTail = 36.841361487904734;

void validate_sides(const std::vector<double>& sides) {
  if (sides.empty() || sides.size() > std::size_t(kMaxDim))
    throw BadParameterError("torus needs between 1 and " + std::to_string(kMaxDim) +
                            " side lengths");
  for (double L : sides)
    if (!(L > 0.0)) throw BadParameterError("torus side lengths must be positive");
}

}  // namespace

TorusSpectrum torus_spectrum(const std::vector<double>& sides, int cutoff, int multiplicity) {
  validate_sides(sides);
  const int n = int(sides.size());
  if (cutoff < 1) throw BadParameterError("cutoff must be >= 1");
  if (multiplicity == 0) multiplicity = 1 << (n / 2);  // spinor rank
  if (multiplicity < 1) throw BadParameterError("multiplicity must be >= 1");

  const std::int64_t per_axis = 2 * std::int64_t(cutoff) + 1;
  std::int64_t count = 1;
  for (int a = 0; a < n; ++a) {
    count *= per_axis;
    if (count > 50'000'000)
      throw BadParameterError("frequency box (2*" + std::to_string(cutoff) + "+1)^" +
                              std::to_string(n) + " is too large to enumerate");
  }

  TorusSpectrum spec;
  spec.sides = sides;
  spec.cutoff = cutoff;
  spec.multiplicity = multiplicity;
  spec.eigenvalues.resize(std::size_t(count));

  std::vector<double> scale(std::size_t(n), 0.0);
  for (int a = 0; a < n; ++a) scale[std::size_t(a)] = kTwoPi / sides[std::size_t(a)];

  parallel_blocks(count, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t lin = begin; lin < end; ++lin) {
      std::int64_t rest = lin;
      double lambda = 0.0;
      for (int a = n - 1; a >= 0; --a) {
        const std::int64_t m = rest % per_axis - cutoff;
        rest /= per_axis;
        const double w = scale[std::size_t(a)] * double(m);
        lambda += w * w;
      }
      spec.eigenvalues[std::size_t(lin)] = lambda;
    }
  });
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  return spec;
}

int required_cutoff(const std::vector<double>& sides, double t) {
  validate_sides(sides);
  if (!(t > 0.0)) throw BadParameterError("heat-trace time must be positive");
  const double lmax = *std::max_element(sides.begin(), sides.end());
  // Outside the box some |m_i| >= cutoff + 1, so lambda >= (2 pi (c+1)/Lmax)^2;
  // require t * lambda >= kLogTail there.
  const double c = lmax / kTwoPi * std::sqrt(kLogTail / t) - 1.0;
  return std::max(1, int(std::ceil(c)));
}

double heat_trace(const TorusSpectrum& spec, double t) {
  const int needed = required_cutoff(spec.sides, t);
  if (spec.cutoff < needed)
    throw CutoffTooSmallError("cutoff " + std::to_string(spec.cutoff) +
                                  " leaves a heat-trace tail above 1e-16 at t = " +
                                  std::to_string(t) + "; need at least " + std::to_string(needed),
                              needed);
  const auto& ev = spec.eigenvalues;
  const double sum = parallel_pairwise_sum(
      std::int64_t(ev.size()),
      [&](std::int64_t i) { return std::exp(-t * ev[std::size_t(i)]); });
  return spec.multiplicity * sum;
}

DixmierFit dixmier_quotient(const TorusSpectrum& spec, const DixmierOptions& opts) {
  const int n = int(spec.sides.size());
  if (spec.cutoff < 50)
    throw CutoffTooSmallError("dixmier_quotient needs cutoff >= 50, got " +
                                  std::to_string(spec.cutoff),
                              50);
  if (opts.ladder_base < 2) throw BadParameterError("ladder base must be >= 2");
  if (opts.ladder_start < 2) throw BadParameterError("ladder start must be >= 2");

  // The box spectrum is complete below the inscribed ball of the first
  // excluded shell; past that, eigenvalue order would need a larger cutoff.
  const double lmax = *std::max_element(spec.sides.begin(), spec.sides.end());
  const double complete_below = std::pow(kTwoPi * (spec.cutoff + 1) / lmax, 2.0);

  const auto& ev = spec.eigenvalues;
  std::size_t first_nonzero = 0;
  while (first_nonzero < ev.size() && ev[first_nonzero] <= 0.0) ++first_nonzero;

  std::vector<double> mu;  // distinct-mode values lambda^{-n/2}, nonincreasing
  mu.reserve(ev.size() - first_nonzero);
  std::int64_t complete_modes = 0;
  for (std::size_t i = first_nonzero; i < ev.size(); ++i) {
    if (ev[i] < complete_below) ++complete_modes;
    mu.push_back(std::pow(ev[i], -0.5 * n));
  }
  const std::int64_t M = spec.multiplicity;
  const std::int64_t n_complete = M * complete_modes;

  std::vector<double> prefix(mu.size() + 1, 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) prefix[i + 1] = prefix[i] + mu[i];

  DixmierFit fit;
  for (std::int64_t N = opts.ladder_start; N <= n_complete; N *= opts.ladder_base) {
    const std::int64_t q = N / M;
    const std::int64_t r = N % M;
    double sigma = M * prefix[std::size_t(q)];
    if (r > 0) sigma += double(r) * mu[std::size_t(q)];
    fit.ladder.push_back(N);
    fit.sigma.push_back(sigma);
  }
  if (fit.ladder.size() < 2)
    throw InsufficientLadderError(
        "geometric ladder has " + std::to_string(fit.ladder.size()) +
        " point(s) below the complete-spectrum cap " + std::to_string(n_complete) +
        "; raise the cutoff or lower the ladder start");

  // Least squares for sigma = slope * log N + intercept.
  const std::size_t m = fit.ladder.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(double(fit.ladder[i]));
    const double y = fit.sigma[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = sxx - sx * sx / double(m);
  fit.slope = (sxy - sx * sy / double(m)) / denom;
  fit.intercept = (sy - fit.slope * sx) / double(m);
  return fit;
}

double dixmier_expected(const TorusSpectrum& spec) {
  const int n = int(spec.sides.size());
  double vol = 1.0;
  for (double L : spec.sides) vol *= L;
  return spec.multiplicity * std::pow(4.0 * std::numbers::pi, -0.5 * n) /
         gamma_half(HalfInteger(n + 2)) * vol;
}

}  // namespace lovol
