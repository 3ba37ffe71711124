#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "symlab/trig_poly.hpp"

namespace symlab {

/// A scalar C^1 nonlinearity g with its derivative and, when the family is
/// genuinely bounded, the claimed uniform bound |g| <= bound.
struct Nonlinearity {
  std::function<double(double)> g;
  std::function<double(double)> g_prime;
  std::optional<double> bound;  // claimed sup |g|, if any
  std::string description;
};

/// Samples |g| on a uniform probe grid over [-radius, radius]. Returns the
/// sampled max and whether it stays under the claimed bound (+1e-12 slack).
/// No claim registered counts as a failed check.
std::pair<double, bool> check_bounded(const Nonlinearity& nl, double radius,
                                      int n_samples);

/// Sampled (min, max) of g' on [lo, hi]. An estimate, not a proof.
std::pair<double, double> derivative_range(const Nonlinearity& nl, double lo,
                                           double hi, int n_samples);

enum class ComposeKind { Fn, Derivative };

/// Pseudo-spectral composition g(u) (or g'(u)): sample u on a dealiased grid
/// of N >= 4J points, apply pointwise, re-interpolate at the target order.
/// If u is 2*pi/s-periodic the result is too, up to interpolation leakage.
TrigPoly compose(const TrigPoly& u, const Nonlinearity& nl, ComposeKind kind,
                 int order = 0);

}  // namespace symlab
