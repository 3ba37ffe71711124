#include "symlab/problem.hpp"

#include <algorithm>

namespace symlab {

TrigPoly residual(const Nonlinearity& nl, const TrigPoly& f, const TrigPoly& u,
                  Orientation orientation, int order) {
  const int target = order > 0 ? order : std::max(u.order(), f.order());
  const TrigPoly gu = compose(u, nl, ComposeKind::Fn, target);
  const TrigPoly lu = laplacian(u.padded_to(target));
  return lu + gu * orientation_sign(orientation) - f.padded_to(target);
}

Nonlinearity effective_nonlinearity(const Nonlinearity& nl,
                                    Orientation orientation) {
  if (orientation == Orientation::Minus) return nl;
  Nonlinearity flipped = nl;
  auto g = nl.g;
  auto gp = nl.g_prime;
  flipped.g = [g](double x) { return -g(x); };
  flipped.g_prime = [gp](double x) { return -gp(x); };
  flipped.description = "negated(" + nl.description + ")";
  return flipped;
}

}  // namespace symlab
