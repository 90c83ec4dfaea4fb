#pragma once

#include <string>

#include <json.hpp>

#include "latspan/metrics.hpp"
#include "latspan/mtscs.hpp"
#include "latspan/planner.hpp"
#include "latspan/smoothing.hpp"

namespace latspan {

using json = nlohmann::json;

/// Pruned lattice, its primitive library and the steering settings that built it.
struct LatticeArtifact {
  LatticeSpec spec;
  SteeringConfig steering;
  Lattice lattice;
  PrimitiveLibrary library;
  std::size_t unpruned_vertices = 0;
  std::string hash;  ///< content hash of the serialized lattice and library
};

/// Builds, prunes (when the spec asks for it) and hashes.
LatticeArtifact make_artifact(const LatticeSpec& spec, const SteeringConfig& steering);

LatticeSpec lattice_spec_from_json(const json& j);
json to_json(const LatticeSpec& spec);
SteeringConfig steering_from_json(const json& j);
json to_json(const SteeringConfig& cfg);

json to_json(const LatticeArtifact& a);
/// Rebuilds lattice and traces; throws FormatError on a bad document or hash mismatch.
LatticeArtifact artifact_from_json(const json& j);

json to_json(const ControlSet& cs, const std::string& lattice_hash, bool timing = false);
ControlSet control_set_from_json(const json& j, std::string* lattice_hash = nullptr);

Configuration configuration_from_json(const json& j);
json to_json(const Configuration& c);

Scenario scenario_from_json(const json& j);
json to_json(const Scenario& sc);

json to_json(const Motion& m);
Motion motion_from_json(const json& j, const SteeringConfig& cfg);

/// Wall-clock fields are written only with `timing`, keeping reruns byte-identical.
json to_json(const PlanResult& r, const std::string& lattice_hash, bool timing = false);
PlanResult plan_from_json(const json& j, const SteeringConfig& cfg,
                          std::string* lattice_hash = nullptr);

json to_json(const MetricsReport& m, bool timing = false);

/// Parses a whole file; throws FormatError when unreadable or malformed.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string content_hash(const std::string& text);

}  // namespace latspan
