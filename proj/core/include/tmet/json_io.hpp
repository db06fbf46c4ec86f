#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tmet/space.hpp"

namespace tmet {

// Space document: {"name", "points", "dist", "time", "tau_max",
// "diameter_bound"}; the last two are optional on input.
RawSpace space_from_json(const nlohmann::json& doc);
nlohmann::json space_to_json(const FiniteTimedMetricSpace& s);

RawSpace read_space_file(const std::string& path);
void write_space_file(const std::string& path, const FiniteTimedMetricSpace& s);

// Reads and validates in one step; throws std::runtime_error carrying the
// JSON diagnostics when the document is invalid.
FiniteTimedMetricSpace load_valid_space(const std::string& path, double tol = 0.0);

nlohmann::json violations_to_json(const std::vector<Violation>& vs);

// Family manifest: {"spaces": [paths...], "functions": [[...]] optional,
// "K": number optional}. Paths are resolved relative to the manifest file.
struct FamilyManifest {
  std::vector<std::string> space_paths;
  std::optional<std::vector<std::vector<double>>> functions;
  std::optional<double> lipschitz_bound;  // "K"
};

FamilyManifest read_manifest_file(const std::string& path);

// Loads and validates every member listed in the manifest.
std::vector<SpacePtr> load_family(const FamilyManifest& manifest, double tol = 0.0);

}  // namespace tmet
