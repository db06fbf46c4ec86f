#include "doctest.h"

#include <cmath>

#include "tmet/space.hpp"
#include "helpers.hpp"

using namespace tmet;
using tmet::testing::make_line;
using tmet::testing::make_space;

TEST_CASE("valid space passes validation untouched") {
  auto s = make_line({0.0, 0.25, 1.0});
  auto out = validate_space(RawSpace::from(s));
  REQUIRE(out.ok());
  CHECK(out.space->size() == 3);
  CHECK(out.space->d(0, 2) == 1.0);
  CHECK(out.space->tau(1) == 0.25);
  CHECK(out.space->min_positive_distance() == 0.25);
}

TEST_CASE("shape mismatches are fatal") {
  RawSpace raw;
  raw.name = "bad";
  raw.points = {"a", "b"};
  raw.dist = {{0.0, 1.0}};
  raw.time = {0.0, 0.0};
  auto out = validate_space(raw);
  REQUIRE_FALSE(out.ok());
  CHECK(out.violations.front().kind == ViolationKind::shape);
}

TEST_CASE("each axiom failure is reported under its own kind") {
  auto probe = [](RawSpace raw) {
    auto out = validate_space(raw);
    REQUIRE_FALSE(out.ok());
    return out.violations.front().kind;
  };

  auto base = RawSpace::from(make_line({0.0, 1.0}));

  auto negative = base;
  negative.dist[0][1] = negative.dist[1][0] = -1.0;
  CHECK(probe(negative) == ViolationKind::negative);

  auto asym = base;
  asym.dist[0][1] = 2.0;
  CHECK(probe(asym) == ViolationKind::asymmetry);

  auto diag = base;
  diag.dist[1][1] = 0.5;
  CHECK(probe(diag) == ViolationKind::diagonal);

  auto dup = RawSpace::from(make_line({0.0, 1.0, 1.0}));
  CHECK(probe(dup) == ViolationKind::indefinite);

  auto tri = RawSpace::from(make_line({0.0, 1.0, 2.0}, false));
  tri.dist[0][2] = tri.dist[2][0] = 5.0;
  CHECK(probe(tri) == ViolationKind::triangle);

  auto lip = base;
  lip.time = {0.0, 9.0};
  lip.tau_max = 9.0;
  CHECK(probe(lip) == ViolationKind::lipschitz);

  auto range = base;
  range.time = {0.0, 0.5};
  range.tau_max = 0.25;
  CHECK(probe(range) == ViolationKind::time_range);

  auto bound = base;
  bound.diameter_bound = 0.5;
  CHECK(probe(bound) == ViolationKind::bound);
}

TEST_CASE("triangle repair rewrites the metric with shortest paths") {
  auto raw = RawSpace::from(make_line({0.0, 1.0, 2.0}, false));
  raw.dist[0][2] = raw.dist[2][0] = 5.0;
  raw.diameter_bound = 5.0;
  ValidateOptions opts;
  opts.repair_triangle = true;
  auto out = validate_space(raw, 0.0, opts);
  REQUIRE(out.ok());
  CHECK(out.space->d(0, 2) == 2.0);
}

TEST_CASE("near symmetric entries are averaged inside the tolerance") {
  auto raw = RawSpace::from(make_line({0.0, 1.0}));
  raw.dist[0][1] = 1.0 + 4e-10;
  auto out = validate_space(raw, 1e-9);
  REQUIRE(out.ok());
  CHECK(out.space->d(0, 1) == out.space->d(1, 0));
}

TEST_CASE("zero distance pairs allowed only on request") {
  auto raw = RawSpace::from(make_line({0.0, 1.0, 1.0}));
  ValidateOptions opts;
  opts.allow_zero_distance = true;
  auto out = validate_space(raw, 0.0, opts);
  CHECK(out.ok());
}

TEST_CASE("causal relation on a chain") {
  // tau equals position, so later points lie in the future of earlier ones
  auto s = make_line({0.0, 1.0, 2.0});
  auto out = validate_space(RawSpace::from(s));
  REQUIRE(out.ok());
  auto rel = causal_relation(*out.space);
  CHECK(rel.pairs.size() == 6);  // 3 reflexive + (1,0), (2,1), (2,0)
  CHECK(rel.related(1, 0));
  CHECK(rel.related(2, 0));
  CHECK_FALSE(rel.related(0, 1));
  CHECK(rel.related(0, 0));
}

TEST_CASE("slack between time gap and distance kills causality") {
  auto s = make_space({{0.0, 2.0}, {2.0, 0.0}}, {0.0, 1.0});
  auto out = validate_space(RawSpace::from(s));
  REQUIRE(out.ok());
  auto rel = causal_relation(*out.space);
  CHECK_FALSE(rel.related(1, 0));
  CHECK_FALSE(rel.related(0, 1));
}

TEST_CASE("diameter scans the matrix") {
  auto s = make_line({0.0, 0.3, 0.6, 1.0});
  CHECK(diameter(s) == 1.0);
}
