#include "symlab/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symlab {

TrigPoly TrigPoly::harmonic_cos(int mode, double amplitude, int order) {
  if (mode < 1) throw PreconditionViolation("harmonic mode must be >= 1");
  TrigPoly u(std::max(mode, order));
  u.cos_coeffs[static_cast<std::size_t>(mode - 1)] = amplitude;
  return u;
}

TrigPoly TrigPoly::harmonic_sin(int mode, double amplitude, int order) {
  if (mode < 1) throw PreconditionViolation("harmonic mode must be >= 1");
  TrigPoly u(std::max(mode, order));
  u.sin_coeffs[static_cast<std::size_t>(mode - 1)] = amplitude;
  return u;
}

TrigPoly TrigPoly::padded_to(int order) const {
  TrigPoly out(std::max(order, this->order()));
  out.a0 = a0;
  std::copy(cos_coeffs.begin(), cos_coeffs.end(), out.cos_coeffs.begin());
  std::copy(sin_coeffs.begin(), sin_coeffs.end(), out.sin_coeffs.begin());
  return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  TrigPoly out(std::max(order(), other.order()));
  out.a0 = a0 + other.a0;
  for (int j = 1; j <= out.order(); ++j) {
    out.cos_coeffs[j - 1] = coeff_cos(j) + other.coeff_cos(j);
    out.sin_coeffs[j - 1] = coeff_sin(j) + other.coeff_sin(j);
  }
  return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const {
  return *this + (other * -1.0);
}

TrigPoly TrigPoly::operator-() const { return *this * -1.0; }

TrigPoly TrigPoly::operator*(double scale) const {
  TrigPoly out = *this;
  out.a0 *= scale;
  for (double& c : out.cos_coeffs) c *= scale;
  for (double& c : out.sin_coeffs) c *= scale;
  return out;
}

GridFunction::GridFunction(std::vector<double> values)
    : samples(std::move(values)) {
  if (samples.size() < 2 || samples.size() % 2 != 0)
    throw PreconditionViolation("grid size must be even and >= 2");
}

double evaluate(const TrigPoly& u, double t) {
  double value = u.a0;
  for (int j = 1; j <= u.order(); ++j) {
    value += u.cos_coeffs[j - 1] * std::cos(j * t) +
             u.sin_coeffs[j - 1] * std::sin(j * t);
  }
  return value;
}

GridFunction to_samples(const TrigPoly& u, int n) {
  if (n < 2 * u.order() + 2)
    throw AliasingError(u.order(), n);
  if (n % 2 != 0) throw PreconditionViolation("grid size must be even");
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) values[k] = evaluate(u, GridFunction::node(k, n));
  return GridFunction(std::move(values));
}

TrigPoly from_samples(const GridFunction& gf, int order) {
  const int n = gf.size();
  if (n < 2 * order + 2) throw AliasingError(order, n);
  TrigPoly u(order);
  double sum = 0.0;
  for (double v : gf.samples) sum += v;
  u.a0 = sum / n;
  for (int j = 1; j <= order; ++j) {
    double ac = 0.0, as = 0.0;
    for (int k = 0; k < n; ++k) {
      const double t = GridFunction::node(k, n);
      ac += gf.samples[k] * std::cos(j * t);
      as += gf.samples[k] * std::sin(j * t);
    }
    u.cos_coeffs[j - 1] = 2.0 * ac / n;
    u.sin_coeffs[j - 1] = 2.0 * as / n;
  }
  return u;
}

TrigPoly differentiate(const TrigPoly& u) {
  TrigPoly out(u.order());
  for (int j = 1; j <= u.order(); ++j) {
    out.cos_coeffs[j - 1] = j * u.sin_coeffs[j - 1];
    out.sin_coeffs[j - 1] = -j * u.cos_coeffs[j - 1];
  }
  return out;
}

namespace {

double weighted_inner(const TrigPoly& u, const TrigPoly& v, bool h1) {
  double total = kTwoPi * u.a0 * v.a0;
  const int order = std::max(u.order(), v.order());
  for (int j = 1; j <= order; ++j) {
    const double weight = h1 ? 1.0 + static_cast<double>(j) * j : 1.0;
    total += kPi * weight *
             (u.coeff_cos(j) * v.coeff_cos(j) + u.coeff_sin(j) * v.coeff_sin(j));
  }
  return total;
}

}  // namespace

double l2_inner(const TrigPoly& u, const TrigPoly& v) {
  return weighted_inner(u, v, false);
}

double l2_norm(const TrigPoly& u) { return std::sqrt(l2_inner(u, u)); }

double h1_inner(const TrigPoly& u, const TrigPoly& v) {
  return weighted_inner(u, v, true);
}

double h1_norm(const TrigPoly& u) { return std::sqrt(h1_inner(u, u)); }

TrigPoly project_periodic(const TrigPoly& u, int s) {
  if (s < 1) throw PreconditionViolation("period divisor must be >= 1");
  TrigPoly out(u.order());
  out.a0 = u.a0;
  for (int j = s; j <= u.order(); j += s) {
    out.cos_coeffs[j - 1] = u.cos_coeffs[j - 1];
    out.sin_coeffs[j - 1] = u.sin_coeffs[j - 1];
  }
  return out;
}

TrigPoly project_periodic_complement(const TrigPoly& u, int s) {
  return u - project_periodic(u, s);
}

TrigPoly project_mode(const TrigPoly& u, int j) {
  if (j < 0 || j > u.order())
    throw PreconditionViolation("mode outside truncation");
  TrigPoly out(u.order());
  if (j == 0) {
    out.a0 = u.a0;
  } else {
    out.cos_coeffs[j - 1] = u.cos_coeffs[j - 1];
    out.sin_coeffs[j - 1] = u.sin_coeffs[j - 1];
  }
  return out;
}

std::optional<int> periodicity_index(const TrigPoly& u, double tol) {
  if (tol <= 0.0) throw PreconditionViolation("tolerance must be positive");
  int g = 0;
  for (int j = 1; j <= u.order(); ++j) {
    if (std::hypot(u.cos_coeffs[j - 1], u.sin_coeffs[j - 1]) > tol)
      g = std::gcd(g, j);
  }
  if (g == 0) return std::nullopt;
  return g;
}

std::optional<int> periodicity_index(const TrigPoly& u) {
  return periodicity_index(u, std::max(1e-9 * h1_norm(u), 1e-300));
}

}  // namespace symlab
