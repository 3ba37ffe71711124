#pragma once

#include "symlab/nonlinearity.hpp"
#include "symlab/spectrum.hpp"
#include "symlab/trig_poly.hpp"

namespace symlab {

// Sign convention for the semilinear problem. The canonical orientation is
//   Minus:  -u'' - g(u) = f      residual R(u) = L u - g(u) - f
// under which the nonresonance condition "g' inside one spectral gap" and
// the quadratic forms int(|h'|^2 - g'|h|^2) are mutually consistent. Plus
// keeps the opposite literal sign available:
//   Plus:   -u'' + g(u) = f      residual R(u) = L u + g(u) - f
enum class Orientation { Minus, Plus };

inline double orientation_sign(Orientation o) {
  return o == Orientation::Minus ? -1.0 : 1.0;
}

/// Residual of the semilinear equation at u, truncated at `order`
/// (0: max of the input orders).
TrigPoly residual(const Nonlinearity& nl, const TrigPoly& f, const TrigPoly& u,
                  Orientation orientation = Orientation::Minus, int order = 0);

/// The nonlinearity as seen by the canonical (Minus) residual: identity for
/// Minus, negated for Plus. Solvers work on the canonical form only.
Nonlinearity effective_nonlinearity(const Nonlinearity& nl,
                                    Orientation orientation);

}  // namespace symlab
