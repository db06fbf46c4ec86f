#include "tmet/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tmet {

using nlohmann::json;

RawSpace space_from_json(const json& doc) {
  RawSpace raw;
  raw.name = doc.value("name", std::string{});
  raw.points = doc.at("points").get<std::vector<std::string>>();
  raw.dist = doc.at("dist").get<std::vector<std::vector<double>>>();
  raw.time = doc.at("time").get<std::vector<double>>();
  if (doc.contains("tau_max")) raw.tau_max = doc.at("tau_max").get<double>();
  if (doc.contains("diameter_bound"))
    raw.diameter_bound = doc.at("diameter_bound").get<double>();
  return raw;
}

json space_to_json(const FiniteTimedMetricSpace& s) {
  return json{{"name", s.name},     {"points", s.points},
              {"dist", s.dist},     {"time", s.time},
              {"tau_max", s.tau_max}, {"diameter_bound", s.diameter_bound}};
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

}  // namespace

RawSpace read_space_file(const std::string& path) {
  return space_from_json(parse_file(path));
}

void write_space_file(const std::string& path, const FiniteTimedMetricSpace& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << space_to_json(s).dump(2) << '\n';
}

FiniteTimedMetricSpace load_valid_space(const std::string& path, double tol) {
  auto outcome = validate_space(read_space_file(path), tol);
  if (!outcome.ok())
    throw std::runtime_error(path + ": " +
                             violations_to_json(outcome.violations).dump());
  return *std::move(outcome.space);
}

json violations_to_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs)
    arr.push_back(json{{"kind", violation_name(v.kind)},
                       {"where", v.where},
                       {"message", v.message}});
  return arr;
}

FamilyManifest read_manifest_file(const std::string& path) {
  const json doc = parse_file(path);
  FamilyManifest m;
  const auto base = std::filesystem::path(path).parent_path();
  for (const auto& p : doc.at("spaces").get<std::vector<std::string>>()) {
    std::filesystem::path sp(p);
    m.space_paths.push_back(sp.is_absolute() ? sp.string() : (base / sp).string());
  }
  if (doc.contains("functions"))
    m.functions = doc.at("functions").get<std::vector<std::vector<double>>>();
  if (doc.contains("K")) m.lipschitz_bound = doc.at("K").get<double>();
  return m;
}

std::vector<SpacePtr> load_family(const FamilyManifest& manifest, double tol) {
  std::vector<SpacePtr> spaces;
  for (const auto& path : manifest.space_paths)
    spaces.push_back(
        std::make_shared<const FiniteTimedMetricSpace>(load_valid_space(path, tol)));
  return spaces;
}

}  // namespace tmet
