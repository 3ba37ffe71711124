#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symlab/nonlinearity.hpp"
#include "symlab/spectrum.hpp"
#include "symlab/trig_poly.hpp"

namespace symlab {

/// One basis element of the complement of the 2*pi/s-periodic subspace.
struct ModeLabel {
  int mode = 0;
  bool is_sin = false;  // cos sorts before sin
};

/// Basis {cos(jt), sin(jt) : 1 <= j <= order, s does not divide j} in
/// deterministic order: ascending j, cos before sin. No constant mode.
/// Requires s >= 2 (for s = 1 the complement is trivial).
std::vector<ModeLabel> complement_basis(int s, int order);

/// The quadratic form h -> int_0^{2pi} (|h'|^2 - W |h|^2) dt restricted to
/// the complement of the 2*pi/s-periodic subspace, truncated at `order`.
struct QuadraticForm {
  TrigPoly potential;  // the weight W(t)
  int s = 2;
  int order = 16;
};

/// Galerkin matrix of the form in the l2-normalized complement basis
/// (each element divided by sqrt(pi)). The stiffness part is diagonal j^2;
/// the potential part is quadrature on a grid of >= 4*order points, which is
/// exact for trigonometric potentials of order <= order. Exactly symmetric.
Eigen::MatrixXd assemble(const QuadraticForm& form);

struct MorseReport {
  int index = 0;                    // count of negative eigenvalues
  std::vector<double> eigenvalues;  // ascending
  double margin = 0.0;              // min |eigenvalue|
  int basis_dim = 0;
  bool degenerate = false;  // margin < degeneracy_tol * max |eigenvalue|
  double degeneracy_tol = 1e-8;
};

/// Eigendecomposition of the Galerkin matrix; degeneracy_tol is relative to
/// the largest |eigenvalue|.
MorseReport morse_index(const QuadraticForm& form,
                        double degeneracy_tol = 1e-8);

/// A certified interval [center - delta, center + delta] on which g' stays
/// strictly inside the gap, with the sampled derivative bounds.
struct WindowCertificate {
  double center = 0.0;
  double delta = 0.0;
  SpectralGap gap;
  double min_derivative = 0.0;
  double max_derivative = 0.0;
};

/// Near-maximal certified window: start at delta = 1, halve until the
/// sampled g' range sits inside the gap with relative margin >= tol, then
/// expand by the golden ratio (capped at delta_max) and bisect back to the
/// edge of validity. Throws NoWindow when even the center fails.
WindowCertificate find_delta(const Nonlinearity& nl, double center,
                             const SpectralGap& gap, double tol = 1e-3,
                             double delta_max = 8.0, int n_samples = 4096);

/// The profile amplitude*sin(s t) + center: the canonical 2*pi/s-periodic
/// state whose values sweep [center - amplitude, center + amplitude].
TrigPoly sine_profile(double center, double amplitude, int s);

}  // namespace symlab
