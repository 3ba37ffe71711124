#pragma once

#include <optional>

#include "symlab/trig_poly.hpp"

namespace symlab {

// The operator is -d^2/dt^2 on 2*pi-periodic functions. Its spectrum is
// { j^2 : j >= 0 }; the zero eigenvalue is simple, every other one double.
// Everything here is mode-wise on the truncated series.

inline double eigenvalue(int j) { return static_cast<double>(j) * j; }
inline int multiplicity(int j) { return j == 0 ? 1 : 2; }

/// Open interval (i^2, (i+1)^2) between consecutive eigenvalues.
struct SpectralGap {
  int index = 0;
  double lo = 0.0;
  double hi = 1.0;

  static SpectralGap at(int i) {
    return SpectralGap{i, eigenvalue(i), eigenvalue(i + 1)};
  }
};

/// Shifts closer than this to an eigenvalue count as resonant.
inline constexpr double kResonanceMargin = 1e-9;

/// -u'': mode j scaled by j^2.
TrigPoly laplacian(const TrigPoly& u);

/// Mode-wise (L - shift I)^{-1}: mode j divided by (j^2 - shift).
/// Throws ResonantShift when the shift is within kResonanceMargin of some
/// j^2 with j <= order(rhs).
TrigPoly resolvent_apply(double shift, const TrigPoly& rhs);

/// The gap containing value, or nullopt when value sits on the spectrum
/// (within kResonanceMargin). Throws BelowSpectrum for value < 0; the gap
/// (-inf, 0) is reported distinctly from the interior ones.
std::optional<SpectralGap> gap_of(double value);

}  // namespace symlab
