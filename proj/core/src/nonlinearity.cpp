#include "symlab/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

namespace symlab {

std::pair<double, bool> check_bounded(const Nonlinearity& nl, double radius,
                                      int n_samples) {
  if (radius <= 0.0 || n_samples < 2)
    throw PreconditionViolation("bounded check needs radius > 0, n >= 2");
  double max_abs = 0.0;
  for (int i = 0; i <= n_samples; ++i) {
    const double x = -radius + 2.0 * radius * i / n_samples;
    max_abs = std::max(max_abs, std::abs(nl.g(x)));
  }
  const bool ok = nl.bound.has_value() && max_abs <= *nl.bound + 1e-12;
  return {max_abs, ok};
}

std::pair<double, double> derivative_range(const Nonlinearity& nl, double lo,
                                           double hi, int n_samples) {
  if (!(lo < hi) || n_samples < 64)
    throw PreconditionViolation("derivative range needs lo < hi, n >= 64");
  double mn = nl.g_prime(lo), mx = mn;
  for (int i = 1; i <= n_samples; ++i) {
    const double x = lo + (hi - lo) * i / n_samples;
    const double d = nl.g_prime(x);
    mn = std::min(mn, d);
    mx = std::max(mx, d);
  }
  return {mn, mx};
}

TrigPoly compose(const TrigPoly& u, const Nonlinearity& nl, ComposeKind kind,
                 int order) {
  const int target = order > 0 ? order : std::max(u.order(), 1);
  // Dealiasing rule: at least 4 samples per target mode (fixed, documented;
  // stronger-than-cubic nonlinearities accept the remaining truncation).
  const int n = std::max({4 * target, 2 * u.order() + 2, 16});
  GridFunction gf = to_samples(u, n);
  const auto& fn = kind == ComposeKind::Fn ? nl.g : nl.g_prime;
  for (double& v : gf.samples) v = fn(v);
  return from_samples(gf, target);
}

}  // namespace symlab
