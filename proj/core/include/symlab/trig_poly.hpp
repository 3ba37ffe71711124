#pragma once

#include <optional>
#include <vector>

#include "symlab/errors.hpp"

namespace symlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Truncated real trigonometric series on [0, 2*pi]:
///
///   u(t) = a0 + sum_{j=1}^{J} cos_coeffs[j-1] * cos(j t)
///               + sin_coeffs[j-1] * sin(j t)
///
/// This is the universal representation for states, forcings and test
/// directions. Coefficients are stored in the real cos/sin basis so that
/// symmetry subspaces and Galerkin matrices stay real. Periodicity
/// u(0) = u(2*pi) is structural. Values are immutable in spirit: all
/// operations are pure functions returning new values.
struct TrigPoly {
  double a0 = 0.0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  TrigPoly() = default;

  explicit TrigPoly(int order)
      : cos_coeffs(static_cast<std::size_t>(order), 0.0),
        sin_coeffs(static_cast<std::size_t>(order), 0.0) {}

  TrigPoly(double a0, std::vector<double> cos, std::vector<double> sin)
      : a0(a0), cos_coeffs(std::move(cos)), sin_coeffs(std::move(sin)) {
    if (cos_coeffs.size() != sin_coeffs.size())
      throw PreconditionViolation("cos/sin coefficient arrays differ in length");
  }

  static TrigPoly constant(double value) {
    TrigPoly u;
    u.a0 = value;
    return u;
  }

  /// amplitude * cos(mode t), order defaults to the mode itself.
  static TrigPoly harmonic_cos(int mode, double amplitude, int order = 0);
  static TrigPoly harmonic_sin(int mode, double amplitude, int order = 0);

  int order() const { return static_cast<int>(cos_coeffs.size()); }

  /// 1-based read access; modes beyond the truncation read as zero.
  double coeff_cos(int j) const {
    return (j >= 1 && j <= order()) ? cos_coeffs[static_cast<std::size_t>(j - 1)] : 0.0;
  }
  double coeff_sin(int j) const {
    return (j >= 1 && j <= order()) ? sin_coeffs[static_cast<std::size_t>(j - 1)] : 0.0;
  }

  TrigPoly padded_to(int order) const;

  TrigPoly operator+(const TrigPoly& other) const;
  TrigPoly operator-(const TrigPoly& other) const;
  TrigPoly operator-() const;
  TrigPoly operator*(double scale) const;
};

inline TrigPoly operator*(double scale, const TrigPoly& u) { return u * scale; }

/// Samples at the uniform grid t_k = 2*pi*k/N, k = 0..N-1. N is always even.
struct GridFunction {
  std::vector<double> samples;

  GridFunction() = default;
  explicit GridFunction(std::vector<double> values);

  int size() const { return static_cast<int>(samples.size()); }
  static double node(int k, int n) { return kTwoPi * k / n; }
};

double evaluate(const TrigPoly& u, double t);

/// Pointwise samples on the N-point uniform grid. Requires N even, N >= 2J+2.
GridFunction to_samples(const TrigPoly& u, int n);

/// Trigonometric interpolation of the low modes; exact left inverse of
/// to_samples for series of order J when N >= 2J+2.
TrigPoly from_samples(const GridFunction& gf, int order);

/// Mode j maps (a_j, b_j) -> (j*b_j, -j*a_j); the constant mode drops.
TrigPoly differentiate(const TrigPoly& u);

// Closed-form inner products via the coefficient (Parseval) sums:
//   l2:  2*pi*a0*a0' + pi*sum (a_j a_j' + b_j b_j')
//   h1:  same with per-mode weight (1 + j^2)
double l2_inner(const TrigPoly& u, const TrigPoly& v);
double l2_norm(const TrigPoly& u);
double h1_inner(const TrigPoly& u, const TrigPoly& v);
double h1_norm(const TrigPoly& u);

/// Orthogonal projection onto the 2*pi/s-periodic subspace: keeps the
/// constant mode and every mode j with s | j. Idempotent, h1-orthogonal.
TrigPoly project_periodic(const TrigPoly& u, int s);

/// u minus its 2*pi/s-periodic part.
TrigPoly project_periodic_complement(const TrigPoly& u, int s);

/// Keeps a single mode: j = 0 is the constant, j >= 1 the (cos, sin) pair.
TrigPoly project_mode(const TrigPoly& u, int j);

/// gcd of the mode indices whose magnitude hypot(a_j, b_j) exceeds tol;
/// the minimal period of u is then 2*pi/k. nullopt means only the constant
/// mode survives.
std::optional<int> periodicity_index(const TrigPoly& u, double tol);

/// Default tolerance: 1e-9 relative to h1_norm(u).
std::optional<int> periodicity_index(const TrigPoly& u);

}  // namespace symlab
