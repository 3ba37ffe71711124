#pragma once

#include <stdexcept>
#include <string>

namespace symlab {

/// Base class for every error this library throws deliberately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Conversion between grid and series would alias represented modes.
class AliasingError : public Error {
 public:
  AliasingError(int order, int grid_size)
      : Error("grid of " + std::to_string(grid_size) +
              " samples cannot carry order " + std::to_string(order) +
              " (need N >= 2J+2)"),
        order(order),
        grid_size(grid_size) {}
  int order;
  int grid_size;
};

/// Resolvent shift too close to an eigenvalue j^2.
class ResonantShift : public Error {
 public:
  ResonantShift(double shift, int mode)
      : Error("shift " + std::to_string(shift) + " is resonant at mode j=" +
              std::to_string(mode)),
        shift(shift),
        mode(mode) {}
  double shift;
  int mode;
};

/// Query below the bottom of the spectrum (the gap (-inf, 0)).
class BelowSpectrum : public Error {
 public:
  explicit BelowSpectrum(double value)
      : Error("value " + std::to_string(value) +
              " lies below the spectrum (smallest eigenvalue is 0)"),
        value(value) {}
  double value;
};

/// [q, p] does not fit strictly inside one spectral gap.
class GapViolation : public Error {
 public:
  GapViolation(double q, double p, int mode)
      : Error("interval [" + std::to_string(q) + ", " + std::to_string(p) +
              "] touches or straddles the eigenvalue at mode j=" +
              std::to_string(mode)),
        q(q),
        p(p),
        mode(mode) {}
  double q;
  double p;
  int mode;
};

class MaxIterExceeded : public Error {
 public:
  MaxIterExceeded(int iterations, double residual)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        iterations(iterations),
        residual(residual) {}
  int iterations;
  double residual;
};

class SingularJacobian : public Error {
 public:
  explicit SingularJacobian(double smallest_singular_value)
      : Error("near-degenerate linearization (smallest singular value " +
              std::to_string(smallest_singular_value) + ")"),
        smallest_singular_value(smallest_singular_value) {}
  double smallest_singular_value;
};

/// The computed solution left the derivative interval the certificate assumed.
class PostHocRangeViolation : public Error {
 public:
  PostHocRangeViolation(double observed_min, double observed_max, double q,
                        double p)
      : Error("certificate did not apply: g' on the solution spans [" +
              std::to_string(observed_min) + ", " +
              std::to_string(observed_max) + "] but was certified for [" +
              std::to_string(q) + ", " + std::to_string(p) + "]"),
        observed_min(observed_min),
        observed_max(observed_max),
        q(q),
        p(p) {}
  double observed_min;
  double observed_max;
  double q;
  double p;
};

/// No certified window around the requested center.
class NoWindow : public Error {
 public:
  NoWindow(double center, double derivative, double lo, double hi)
      : Error("g'(" + std::to_string(center) + ") = " +
              std::to_string(derivative) + " admits no window inside (" +
              std::to_string(lo) + ", " + std::to_string(hi) + ")"),
        center(center),
        derivative(derivative),
        lo(lo),
        hi(hi) {}
  double center;
  double derivative;
  double lo;
  double hi;
};

/// The scan never entered one of the two derivative windows.
class NoWitness : public Error {
 public:
  NoWitness(int r, const std::string& detail)
      : Error("no crossing witness for r=" + std::to_string(r) + ": " +
              detail),
        r(r) {}
  int r;
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Config fails schema validation; carries the offending field path.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& field_path, const std::string& what)
      : Error("config field '" + field_path + "': " + what),
        field_path(field_path) {}
  std::string field_path;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace symlab
