#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symlab/nonlinearity.hpp"

namespace symlab {

/// A registered nonlinearity family instantiated with concrete parameters.
/// The analytic flags are declarations about the family (boundedness of g,
/// decay of the primitive G at both infinities) that sampling alone cannot
/// establish.
struct NonlinearityEntry {
  std::string name;
  std::map<std::string, double> params;
  bool analytic_bounded = false;
  bool analytic_coercive = false;
  Nonlinearity nl;
  // Closed-form primitive G(t) = int_0^t g, when the family has one.
  std::function<double(double)> primitive;
};

/// Instantiates a registered family. Unknown names or parameters throw
/// SchemaError. Registered families:
///   linear         g = a*x                        params: a (1)
///   affine_sine    g = a*x + b*sin(x)             params: a (2.5), b (0.5)
///   cubic          g = a*x^3                      params: a (1)
///   sine           g = a*sin(x)                   params: a (1)
///   rational_decay g = -a*x/(1+x^2)               params: a (1)
///   tanh_ramp      g = a*x + b*c*log(cosh(x/c))   params: a (3), b (3), c (1)
NonlinearityEntry make_nonlinearity(const std::string& name,
                                    const std::map<std::string, double>& params);

std::vector<std::string> registered_names();

/// Centered finite-difference audit of g' at 64 probe points (h = 1e-5);
/// passes when the max relative error is <= 1e-6. Every entry must pass
/// before an experiment uses it.
struct AuditReport {
  double max_rel_error = 0.0;
  double worst_point = 0.0;
  int n_probes = 64;
  double step = 1e-5;
  bool pass = false;
};

AuditReport finite_difference_audit(const NonlinearityEntry& entry);

}  // namespace symlab
