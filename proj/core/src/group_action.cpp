#include "symlab/group_action.hpp"

#include <algorithm>
#include <cmath>

namespace symlab {

TrigPoly translate(const TrigPoly& u, double theta) {
  TrigPoly out(u.order());
  out.a0 = u.a0;
  for (int j = 1; j <= u.order(); ++j) {
    const double c = std::cos(j * theta);
    const double s = std::sin(j * theta);
    const double a = u.cos_coeffs[j - 1];
    const double b = u.sin_coeffs[j - 1];
    out.cos_coeffs[j - 1] = a * c + b * s;
    out.sin_coeffs[j - 1] = -a * s + b * c;
  }
  return out;
}

TrigPoly act(const ZmAction& action, int g, const TrigPoly& u) {
  if (action.m < 1) throw PreconditionViolation("group order must be >= 1");
  int r = g % action.m;
  if (r < 0) r += action.m;
  return translate(u, kTwoPi * r / action.m);
}

SymmetryDefect symmetry_defect(const TrigPoly& u, int s) {
  SymmetryDefect out;
  out.s = s;
  out.defect = h1_norm(project_periodic_complement(u, s));
  const double norm = h1_norm(u);
  out.relative = norm > 0.0 ? out.defect / norm : 0.0;
  return out;
}

double orbit_distance(const TrigPoly& u, const TrigPoly& v,
                      const ZmAction& action) {
  double best = h1_norm(u - v);
  for (int g = 1; g < action.m; ++g)
    best = std::min(best, h1_norm(u - act(action, g, v)));
  return best;
}

double shift_distance(const TrigPoly& u, const TrigPoly& v, int n_scan) {
  // d(theta)^2 is a trigonometric polynomial in theta; scan coarsely, then
  // golden-section inside the bracketing interval.
  auto dist = [&](double theta) { return h1_norm(u - translate(v, theta)); };
  double best_theta = 0.0;
  double best = dist(0.0);
  for (int i = 1; i < n_scan; ++i) {
    const double theta = kTwoPi * i / n_scan;
    const double d = dist(theta);
    if (d < best) {
      best = d;
      best_theta = theta;
    }
  }
  const double step = kTwoPi / n_scan;
  double lo = best_theta - step, hi = best_theta + step;
  const double golden = 0.6180339887498949;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = dist(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = dist(x2);
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace symlab
