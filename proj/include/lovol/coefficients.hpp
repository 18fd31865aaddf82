#pragma once

#include "lovol/errors.hpp"

namespace lovol {

// A positive integer or half-integer q = twice_value / 2.
struct HalfInteger {
  int twice_value;

  explicit HalfInteger(int twice) : twice_value(twice) {
    if (twice < 1) throw BadParameterError("HalfInteger must be >= 1/2");
  }
  static HalfInteger of_int(int m) { return HalfInteger(2 * m); }
  static HalfInteger int_plus_half(int m) { return HalfInteger(2 * m + 1); }

  double value() const { return 0.5 * twice_value; }
};

// Gamma(q) for integer and half-integer q, by the exact recursions
// Gamma(m) = (m-1)! and Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!),
// evaluated as an ascending product so that gamma_half(q + 1) extends the
// product for gamma_half(q) bitwise.
double gamma_half(HalfInteger q);

// The length-element normalization constant:
//   even n:  c_n  = sqrt(2 pi) Gamma(n/2 + 1)^(1/n)
//   odd  n:  c'_n = 2^(1/2n) sqrt(2 pi) Gamma(n/2 + 1)^(1/n)
double length_scale(int n);

// Dimension constant converting the curvature-invariant integral into the
// k-dimensional volume of an n-manifold, together with the parity rule.
struct CoefficientSet {
  int n = 0;
  int k = 0;
  bool vanishes = false;  // true exactly when n - k is odd
  double coefficient = 0.0;
  double length_scale = 0.0;  // c_n (even n) or c'_n (odd n)
};

// nu_{n,k} (even n) or nu'_{n,k} (odd n):
//   nu_{n,k}  = (k/n) (2 pi)^((k-n)/2) Gamma(n/2+1)^(k/n) / Gamma(k/2+1)
//   nu'_{n,k} = (k/n) 2^((k-n)(n+1)/2n) pi^((k-n)/2) Gamma(n/2+1)^(k/n) / Gamma(k/2+1)
// Zero (vanishes = true) when n - k is odd; equal to 1 when k = n.
CoefficientSet nu(int n, int k);

}  // namespace lovol
