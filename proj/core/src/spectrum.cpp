#include "symlab/spectrum.hpp"

#include <cmath>

namespace symlab {

TrigPoly laplacian(const TrigPoly& u) {
  TrigPoly out(u.order());
  for (int j = 1; j <= u.order(); ++j) {
    const double lambda = eigenvalue(j);
    out.cos_coeffs[j - 1] = lambda * u.cos_coeffs[j - 1];
    out.sin_coeffs[j - 1] = lambda * u.sin_coeffs[j - 1];
  }
  return out;
}

TrigPoly resolvent_apply(double shift, const TrigPoly& rhs) {
  for (int j = 0; j <= rhs.order(); ++j) {
    if (std::abs(eigenvalue(j) - shift) < kResonanceMargin)
      throw ResonantShift(shift, j);
  }
  TrigPoly out(rhs.order());
  out.a0 = rhs.a0 / (0.0 - shift);
  for (int j = 1; j <= rhs.order(); ++j) {
    const double d = eigenvalue(j) - shift;
    out.cos_coeffs[j - 1] = rhs.cos_coeffs[j - 1] / d;
    out.sin_coeffs[j - 1] = rhs.sin_coeffs[j - 1] / d;
  }
  return out;
}

std::optional<SpectralGap> gap_of(double value) {
  if (value < 0.0) {
    if (value > -kResonanceMargin) return std::nullopt;  // sitting on 0
    throw BelowSpectrum(value);
  }
  const int i = static_cast<int>(std::floor(std::sqrt(value)));
  // floor(sqrt) can land on either side of the nearest eigenvalue; settle by
  // direct comparison.
  for (int j = std::max(0, i - 1); j <= i + 1; ++j) {
    if (std::abs(value - eigenvalue(j)) < kResonanceMargin) return std::nullopt;
  }
  const int gap_index = eigenvalue(i) < value ? i : i - 1;
  return SpectralGap::at(gap_index);
}

}  // namespace symlab
