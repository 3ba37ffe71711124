#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "symlab/breaking.hpp"
#include "symlab/config.hpp"
#include "symlab/lyapunov_schmidt.hpp"
#include "symlab/morse.hpp"
#include "symlab/registry.hpp"
#include "symlab/solvers.hpp"

namespace symlab {

/// Reproducibility envelope for one run. wall_time_ms is a measurement, not
/// part of the record payload: serialized records omit it so identical
/// configs produce byte-identical files.
struct RunManifest {
  std::string command;
  std::string config_digest;
  std::uint64_t seed = 0;
  int order = 0;  // truncation J
  int grid = 0;   // sample grid N
  Orientation orientation = Orientation::Minus;
  std::string tool_version;
  long wall_time_ms = 0;
};

nlohmann::json to_json(const TrigPoly& u);  // fields a0, cos, sin, J
TrigPoly trig_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunManifest& m);  // omits wall_time_ms
nlohmann::json to_json(const GapCertificate& cert);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const SymmetryDefect& defect);
nlohmann::json to_json(const PreservationReport& report);
nlohmann::json to_json(const MorseReport& report);
nlohmann::json to_json(const WindowCertificate& cert);
nlohmann::json to_json(const CrossingWitness& witness);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const SearchOutcome& outcome);
nlohmann::json to_json(const BreakingRunRecord& record);
nlohmann::json to_json(const AuditReport& report);

/// The full record document: {"manifest": ..., "record": ...}. This is the
/// byte-deterministic payload written to disk and printed by --json.
std::string record_document(const RunManifest& manifest,
                            const nlohmann::json& payload);

/// Two columns t,value with a header row, 17 significant digits.
std::string grid_csv(const GridFunction& gf);

struct EmittedFiles {
  std::string json_path;
  std::vector<std::string> csv_paths;
};

/// Writes `<command>-<digest[0:8]>.json` plus one CSV per named grid
/// (`<command>-<digest[0:8]>-<name>.csv`) under out_dir, creating it if
/// needed. File contents depend only on the inputs. Throws IoError.
EmittedFiles emit_record(
    const RunManifest& manifest, const nlohmann::json& payload,
    const std::vector<std::pair<std::string, GridFunction>>& grids,
    const std::string& out_dir);

}  // namespace symlab
