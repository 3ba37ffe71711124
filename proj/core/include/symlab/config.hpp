#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "symlab/problem.hpp"
#include "symlab/registry.hpp"
#include "symlab/trig_poly.hpp"

namespace symlab {

enum class Command { Solve, PreserveCheck, BreakSearch, Morse, Spectrum, AuditG };

std::string command_name(Command cmd);

/// Fields shared by every config file. Defaults: J=64, N=256, tol=1e-10,
/// seed=0, orientation=minus.
struct CommonConfig {
  int schema_version = 1;
  int order = 64;  // J
  int grid = 256;  // N, even, >= 2J+2
  double tol = 1e-10;
  std::uint64_t seed = 0;
  Orientation orientation = Orientation::Minus;
  NonlinearityEntry g;
};

struct RangeSpec {
  double lo = -10.0;
  double hi = 10.0;
  int n_samples = 1024;
};

struct SolveConfig {
  CommonConfig common;
  TrigPoly f;
  std::string method = "contraction";  // or "newton"
  std::optional<double> q, p;          // explicit pinching, or:
  std::optional<RangeSpec> derivative_range;  // estimate q, p by sampling
  std::optional<TrigPoly> u0;
  int max_iter = 200;
};

struct PreserveConfig {
  CommonConfig common;
  TrigPoly f;
  int s = 2;
  std::optional<double> q, p;
  std::optional<RangeSpec> derivative_range;
  int n_starts = 10;
  int max_iter = 200;
};

struct MorseConfig {
  CommonConfig common;
  int r = 2;
  int s = 3;
  double degeneracy_tol = 1e-8;
  double window_tol = 1e-3;
  double delta_max = 8.0;
  RangeSpec search{-20.0, 20.0, 2048};
};

struct BreakConfig {
  CommonConfig common;
  int r = 2;
  int s = 3;
  int n_starts = 12;
  double defect_threshold = 0.05;
  double window_tol = 1e-3;
  double delta_max = 8.0;
  double probe_radius = 10.0;
  RangeSpec search{-20.0, 20.0, 2048};
  int max_iter = 100;
};

struct AuditConfig {
  CommonConfig common;
};

/// A validated config: the typed payload for the command, the canonical
/// (defaults-filled, key-sorted) JSON document, and its stable digest.
struct LoadedConfig {
  Command command = Command::Solve;
  nlohmann::json canonical;
  std::string digest;  // 16 hex chars (fnv1a-64 of the canonical dump)

  std::optional<SolveConfig> solve;
  std::optional<PreserveConfig> preserve;
  std::optional<MorseConfig> morse;
  std::optional<BreakConfig> brk;
  std::optional<AuditConfig> audit;
};

/// Parses, validates against the command's schema (unknown keys rejected,
/// with field paths in errors), fills defaults, computes the digest. The
/// seed_override, when present, replaces the config seed before
/// canonicalization. Throws ParseError / SchemaError.
LoadedConfig load_config(const std::string& path, Command cmd,
                         std::optional<std::uint64_t> seed_override = {});

/// Same, from an already-parsed document (used by tests).
LoadedConfig load_config_json(const nlohmann::json& doc, Command cmd,
                              std::optional<std::uint64_t> seed_override = {});

/// FNV-1a 64-bit of a string, as 16 lowercase hex chars.
std::string fnv1a_hex(const std::string& data);

}  // namespace symlab
