#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symlab/group_action.hpp"
#include "symlab/solvers.hpp"

namespace symlab {

/// Orthogonal splitting u = v + w along the 2*pi/s-periodic subspace and its
/// complement.
struct SplitState {
  TrigPoly v;  // symmetric part
  TrigPoly w;  // complement part
  int s = 1;
};

SplitState split(const TrigPoly& u, int s);

/// The residual split the same way: (symmetric part, complement part).
/// Requires f to be 2*pi/s-periodic within 1e-10 relative, else
/// PreconditionViolation.
std::pair<TrigPoly, TrigPoly> residual_pair(
    const SplitState& state, const Nonlinearity& nl, const TrigPoly& f,
    Orientation orientation = Orientation::Minus);

struct PreservationOptions {
  int n_starts = 10;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int order = 32;  // truncation J, reported alongside all results
  int max_iter = 200;
  Orientation orientation = Orientation::Minus;
};

struct PreservationReport {
  SolveReport certified;          // from the contraction solver
  SymmetryDefect defect;          // of the certified solution
  std::optional<int> periodicity; // nullopt = constant
  double max_pairwise_h1 = 0.0;   // across certified + multi-start solutions
  bool preserved = false;         // defect <= tol
  bool probed_unique = false;     // max pairwise distance <= 10*tol
  int n_starts = 0;
  int s = 1;
  int order = 0;
  // Uniqueness is probed, not proven: the verdict covers the solutions this
  // procedure can find, not all of H^1.
  std::string uniqueness_scope =
      "certified contraction solution plus multi-start probe";
};

/// Solves with the certificate, measures the symmetry defect and minimal
/// period of the solution, and probes uniqueness with n_starts Newton runs
/// from seeded random starts.
PreservationReport preservation_check(const Nonlinearity& nl,
                                      const TrigPoly& f, int s,
                                      const GapCertificate& cert,
                                      const PreservationOptions& opts = {});

}  // namespace symlab
