#pragma once

#include <cstdint>
#include <vector>

namespace lovol {

// Laplacian spectrum of a flat torus, enumerated over the frequency box
// |m_i| <= cutoff: lambda_m = sum_i (2 pi m_i / L_i)^2.
struct TorusSpectrum {
  std::vector<double> sides;
  int cutoff = 0;
  int multiplicity = 1;  // applied uniformly at summation time
  std::vector<double> eigenvalues;  // sorted ascending; lambda = 0 exactly once
};

// multiplicity 0 selects the spinor rank 2^{floor(n/2)}.
TorusSpectrum torus_spectrum(const std::vector<double>& sides, int cutoff, int multiplicity = 0);

// Smallest cutoff making every mode outside the box contribute below 1e-16
// to the heat trace at time t.
int required_cutoff(const std::vector<double>& sides, double t);

// Theta(t) = multiplicity * sum_m exp(-t lambda_m), zero mode included.
// Throws CutoffTooSmall (with the required estimate) when the enumerated box
// cannot support time t.
double heat_trace(const TorusSpectrum& spec, double t);

struct DixmierOptions {
  int ladder_base = 2;
  std::int64_t ladder_start = 64;
};

struct DixmierFit {
  double slope = 0.0;  // the Dixmier-trace estimate
  double intercept = 0.0;
  std::vector<std::int64_t> ladder;  // N values used
  std::vector<double> sigma;         // sigma_N = sum_{k<N} mu_k
};

// Dixmier-trace quotient for |D|^{-n} on the torus: mu_k = lambda^{-n/2}
// over nonzero modes (with multiplicity), nonincreasing; sigma_N partial
// sums on a geometric ladder of N capped where the enumerated spectrum stops
// being complete (the inscribed frequency ball); least-squares fit
// sigma_N = slope * log N + intercept. Throws CutoffTooSmall below cutoff 50
// and InsufficientLadder when fewer than two ladder points fit in the cap.
DixmierFit dixmier_quotient(const TorusSpectrum& spec, const DixmierOptions& opts = {});

// Closed-form expectation: multiplicity * (4 pi)^{-n/2} / Gamma(n/2 + 1)
// times vol(T^n); the slope converges to this as the cutoff grows.
double dixmier_expected(const TorusSpectrum& spec);

}  // namespace lovol
