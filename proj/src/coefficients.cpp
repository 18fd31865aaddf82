#include "lovol/coefficients.hpp"

#include <cmath>
#include <numbers>

namespace lovol {

double gamma_half(HalfInteger q) {
  // Seeds: Gamma(1/2) = sqrt(pi), Gamma(1) = 1. Ascend by Gamma(x+1) = x Gamma(x).
  double acc, x;
  if (q.twice_value % 2 == 0) {
    acc = 1.0;
    x = 1.0;
  } else {
    acc = std::sqrt(std::numbers::pi);
    x = 0.5;
  }
  const double target = q.value();
  while (x < target) {
    acc *= x;
    x += 1.0;
  }
  return acc;
}

double length_scale(int n) {
  if (n < 1) throw BadParameterError("dimension must be >= 1");
  const double root_2pi = std::sqrt(2.0 * std::numbers::pi);
  const double g = gamma_half(HalfInteger(n + 2));  // Gamma(n/2 + 1)
  const double base = root_2pi * std::pow(g, 1.0 / n);
  if (n % 2 == 0) return base;
  return std::pow(2.0, 1.0 / (2.0 * n)) * base;
}

CoefficientSet nu(int n, int k) {
  if (n < 1) throw BadParameterError("dimension must be >= 1");
  if (k < 1 || k > n) throw BadParameterError("order k must satisfy 1 <= k <= n");

  CoefficientSet out;
  out.n = n;
  out.k = k;
  out.length_scale = length_scale(n);
  out.vanishes = ((n - k) % 2) != 0;
  if (out.vanishes) {
    out.coefficient = 0.0;
    return out;
  }

  const double gn = gamma_half(HalfInteger(n + 2));  // Gamma(n/2 + 1)
  const double gk = gamma_half(HalfInteger(k + 2));  // Gamma(k/2 + 1)
  const double ratio = std::pow(gn, double(k) / double(n)) / gk;
  const double kn = double(k) / double(n);
  if (n % 2 == 0) {
    out.coefficient = kn * std::pow(2.0 * std::numbers::pi, 0.5 * (k - n)) * ratio;
  } else {
    const double a = double((k - n) * (n + 1)) / (2.0 * n);
    out.coefficient = kn * std::pow(2.0, a) * std::pow(std::numbers::pi, 0.5 * (k - n)) * ratio;
  }
  return out;
}

}  // namespace lovol
