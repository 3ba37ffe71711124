#pragma once

#include <cstdint>
#include <optional>

#include "symlab/problem.hpp"

namespace symlab {

/// A verified pinching lo < q <= p < hi inside one spectral gap, with the
/// midpoint shift and the contraction rate it certifies:
///   center = (p+q)/2,  rate = (p-q)/2 / min(center - lo, hi - center).
struct GapCertificate {
  SpectralGap gap;
  double q = 0.0;
  double p = 0.0;
  double center = 0.0;
  double rate = 0.0;  // kappa, in [0, 1)
};

/// Locates the gap containing [q, p] and builds the certificate.
/// Throws GapViolation when q, p straddle or touch an eigenvalue.
GapCertificate certify_gap(double q, double p);

/// Lipschitz constant of the inverse problem map f -> u certified by the
/// gap: 1 / (dist(center, spectrum) * (1 - rate)). The bound holds in the
/// l2 norm on both sides.
double lipschitz_constant(const GapCertificate& cert);

enum class SolveMethod { Contraction, Newton };

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 200;
  int order = 0;  // truncation J; 0 derives it from the inputs
  Orientation orientation = Orientation::Minus;
  // Finite truncation perturbs the ideal contraction rate; observed step
  // ratios are expected under rate + rate_slack.
  double rate_slack = 0.05;
  // Post-hoc check that g' stays in [q, p] along the computed solution.
  bool check_derivative_range = true;
};

struct SolveReport {
  TrigPoly solution;
  double residual_h1 = 0.0;
  int iterations = 0;
  double observed_rate = 0.0;  // max h1 step ratio, 0 if too few steps
  std::optional<GapCertificate> certificate;
  SolveMethod method = SolveMethod::Contraction;
  int order = 0;
};

/// Certified fixed-point iteration u <- (L - cI)^{-1}(f + g(u) - c u) for the
/// canonical equation L u - g(u) = f. Converges at rate <= cert.rate whenever
/// g' stays in [q, p]; the report is independent of u0.
/// Throws MaxIterExceeded, PostHocRangeViolation.
SolveReport contraction_solve(const Nonlinearity& nl, const TrigPoly& f,
                              const GapCertificate& cert, const TrigPoly& u0,
                              const SolveOptions& opts = {});

/// Damped Newton on the truncated residual; the linearization
/// h -> L h - g'(u) h is assembled as a dense symmetric matrix in the
/// l2-orthonormalized trigonometric basis. Step halving (max 30) on the
/// residual l2 norm. Throws SingularJacobian, MaxIterExceeded.
SolveReport newton_solve(const Nonlinearity& nl, const TrigPoly& f,
                         const TrigPoly& u0, const SolveOptions& opts = {});

}  // namespace symlab
