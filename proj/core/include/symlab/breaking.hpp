#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symlab/group_action.hpp"
#include "symlab/morse.hpp"
#include "symlab/solvers.hpp"

namespace symlab {

enum class CheckStatus { Pass, Fail, Inconclusive };

/// Sampled evidence for the structural conditions on g: a uniform bound on
/// |g| and a primitive G(t) = int_0^t g that decays at both infinities. The
/// decay check is a heuristic on quadrature probes, not a proof.
struct HypothesisReport {
  CheckStatus bounded = CheckStatus::Inconclusive;
  double sampled_max_abs_g = 0.0;
  std::optional<double> claimed_bound;
  CheckStatus coercive = CheckStatus::Inconclusive;
  std::vector<std::pair<double, double>> primitive_probes;  // (t, G(t))
  double probe_radius = 0.0;
};

HypothesisReport check_hypotheses(const Nonlinearity& nl,
                                  double probe_radius = 10.0,
                                  int n_samples = 4096);

/// Two points where g' sits in consecutive gaps around the eigenvalue r^2:
/// (r-1)^2 < g'(t0) < r^2 < g'(t1) < (r+1)^2.
struct CrossingWitness {
  int r = 1;
  double t0 = 0.0;
  double t1 = 0.0;
  double gp_t0 = 0.0;
  double gp_t1 = 0.0;
};

/// Scans g' on a uniform grid over [lo, hi]; each hit is widened to its
/// surrounding plateau (edges refined by bisection) and the plateau midpoint
/// is returned. Requires margin >= 1e-3 from the gap edges.
/// Throws NoWitness when either window is never entered.
CrossingWitness find_crossing(const Nonlinearity& nl, int r, double lo,
                              double hi, int n_samples = 2048);

/// Plants the symmetric profile u* = delta1*sin(s t) + t1 as an exact
/// solution by defining the forcing from the residual with f = 0. Returns
/// (fhat, u*); fhat is 2*pi/s-periodic because u* is.
std::pair<TrigPoly, TrigPoly> construct_forcing(
    const Nonlinearity& nl, const CrossingWitness& witness, int s,
    double delta1, int order, Orientation orientation = Orientation::Minus);

struct BreakingConfig {
  Nonlinearity nl;
  int r = 2;
  int s = 3;
  int order = 32;  // truncation J
  int n_starts = 12;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double defect_threshold = 0.05;  // relative; far above solver tolerance
  Orientation orientation = Orientation::Minus;
  double search_lo = -20.0;
  double search_hi = 20.0;
  int search_samples = 2048;
  double window_tol = 1e-3;
  double delta_max = 8.0;
  double probe_radius = 10.0;
  int max_iter = 100;
  double degeneracy_tol = 1e-8;

  /// Throws SchemaError unless gcd(r, s) = 1 and s >= 2 and n_starts >= 5.
  void validate() const;
};

struct FoundSolution {
  TrigPoly u;
  double residual_h1 = 0.0;
  SymmetryDefect defect;
  int orbit_class = 0;
  int start_index = 0;
  int iterations = 0;
};

struct StartFailure {
  int start_index = 0;
  std::string reason;
};

struct SearchOutcome {
  std::vector<FoundSolution> solutions;
  std::vector<StartFailure> failures;
  int n_classes = 0;
  bool broke_symmetry = false;  // some solution has relative defect above
                                // the threshold -- a search outcome, never
                                // inferred from theory
};

/// Multi-start Newton search around `center`: the center itself, the four
/// r-mode perturbations center +- eps*cos(rt), center +- eps*sin(rt) (the
/// directions where the two quadratic-form signatures differ), then seeded
/// random perturbations in the symmetry complement. Solutions are
/// deduplicated by orbit distance under Z_s plus continuous-shift
/// refinement.
SearchOutcome multistart_search(const Nonlinearity& nl, const TrigPoly& f,
                                const TrigPoly& center, int r, int s,
                                int order, int n_starts, std::uint64_t seed,
                                double tol, double defect_threshold,
                                Orientation orientation = Orientation::Minus,
                                int max_iter = 100);

struct BreakingRunRecord {
  TrigPoly fhat;
  TrigPoly u_star;
  CrossingWitness witness;
  WindowCertificate window0;  // around t0, gap ((r-1)^2, r^2)
  WindowCertificate window1;  // around t1, gap (r^2, (r+1)^2)
  MorseReport morse0;         // index m0 of the form weighted by g'(u0*)
  MorseReport morse1;         // index m1 of the form weighted by g'(u1*)
  HypothesisReport hypotheses;
  SearchOutcome search;
  int r = 0;
  int s = 0;
  int order = 0;
};

/// Full pipeline: hypothesis probes, crossing witness, both window
/// certificates, Morse indices of the two weighted forms, the planted
/// forcing, and the multi-start search. Deterministic for a fixed config.
BreakingRunRecord break_search(const BreakingConfig& cfg);

}  // namespace symlab
