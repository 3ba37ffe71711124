#pragma once

#include "symlab/trig_poly.hpp"

namespace symlab {

/// The cyclic group Z_m acting on periodic functions by translation:
/// element g shifts the argument by 2*pi*g/m.
struct ZmAction {
  int m = 1;
};

/// u(t + theta) for an arbitrary continuous shift; mode j rotates by j*theta:
/// (a_j, b_j) -> (a_j cos + b_j sin, -a_j sin + b_j cos). An h1 isometry.
TrigPoly translate(const TrigPoly& u, double theta);

/// The action of group element g (reduced mod m).
TrigPoly act(const ZmAction& action, int g, const TrigPoly& u);

/// h1 distance from u to the 2*pi/s-periodic subspace. Zero exactly when u
/// already has that symmetry.
struct SymmetryDefect {
  int s = 1;
  double defect = 0.0;
  double relative = 0.0;  // defect / h1_norm(u); 0 for u = 0
};

SymmetryDefect symmetry_defect(const TrigPoly& u, int s);

/// min over group elements of h1_norm(u - T(g) v). A pseudometric whose zero
/// set identifies geometrically equivalent solutions.
double orbit_distance(const TrigPoly& u, const TrigPoly& v,
                      const ZmAction& action);

/// min over continuous shifts theta in [0, 2*pi) of h1_norm(u - v(.+theta)),
/// by coarse scan plus golden-section refinement. Used only to deduplicate
/// numerically found solutions of the autonomous-forced problem.
double shift_distance(const TrigPoly& u, const TrigPoly& v, int n_scan = 512);

}  // namespace symlab
