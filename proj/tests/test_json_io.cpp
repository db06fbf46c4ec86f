#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "tmet/json_io.hpp"
#include "helpers.hpp"

using namespace tmet;
using tmet::testing::make_line;

TEST_CASE("space survives a json round trip") {
  auto s = make_line({0.0, 0.3, 0.6, 1.0});
  auto doc = space_to_json(s);
  CHECK(doc.at("name") == "line");
  CHECK(doc.at("points").size() == 4);
  auto back = space_from_json(doc);
  CHECK(back.dist == s.dist);
  CHECK(back.time == s.time);
  CHECK(back.tau_max == s.tau_max);
  CHECK(back.diameter_bound == s.diameter_bound);
}

TEST_CASE("file round trip and loader validation") {
  const std::string path = "tmet_test_space.json";
  write_space_file(path, make_line({0.0, 0.5, 1.0}));
  auto s = load_valid_space(path);
  CHECK(s.size() == 3);
  CHECK(s.d(0, 2) == 1.0);
  std::remove(path.c_str());
}

TEST_CASE("loader throws with diagnostics for a broken space") {
  auto doc = space_to_json(make_line({0.0, 1.0}));
  doc["dist"][0][1] = -2.0;
  const std::string path = "tmet_test_broken.json";
  std::ofstream(path) << doc.dump(2);
  CHECK_THROWS_AS(load_valid_space(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("optional fields fall back to derived values") {
  nlohmann::json doc = {
      {"name", "two"},
      {"points", {"a", "b"}},
      {"dist", {{0.0, 1.0}, {1.0, 0.0}}},
      {"time", {0.0, 1.0}},
  };
  auto raw = space_from_json(doc);
  CHECK_FALSE(raw.tau_max.has_value());
  auto out = validate_space(raw);
  REQUIRE(out.ok());
  CHECK(out.space->tau_max == 1.0);
  CHECK(out.space->diameter_bound == 1.0);
}

TEST_CASE("violation report carries kind and location") {
  auto raw = RawSpace::from(make_line({0.0, 1.0}));
  raw.dist[0][1] = -2.0;
  auto out = validate_space(raw);
  auto arr = violations_to_json(out.violations);
  REQUIRE_FALSE(arr.empty());
  CHECK(arr[0].at("kind") == "negative");
  CHECK(arr[0].contains("where"));
}

TEST_CASE("family manifest resolves sibling paths and loads members") {
  write_space_file("tmet_member_a.json", make_line({0.0, 1.0}));
  write_space_file("tmet_member_b.json", make_line({0.0, 1.0}));
  nlohmann::json doc = {{"spaces", {"tmet_member_a.json", "tmet_member_b.json"}},
                        {"K", 2.0}};
  std::ofstream("tmet_manifest.json") << doc.dump(2);
  auto manifest = read_manifest_file("tmet_manifest.json");
  CHECK(manifest.space_paths.size() == 2);
  CHECK(manifest.lipschitz_bound == 2.0);
  auto spaces = load_family(manifest);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0]->size() == 2);
  std::remove("tmet_member_a.json");
  std::remove("tmet_member_b.json");
  std::remove("tmet_manifest.json");
}
