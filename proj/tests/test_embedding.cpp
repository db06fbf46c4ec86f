#include "doctest.h"

#include <random>
#include <sstream>

#include "tmet/embedding.hpp"
#include "tmet/generators.hpp"
#include "helpers.hpp"

using namespace tmet;
using tmet::testing::make_line;

TEST_CASE("sup distance demands equal lengths") {
  SupVector u{{0.0, 1.0}, false}, v{{1.0, 0.0}, false}, w{{0.0}, false};
  CHECK(sup_distance(u, v) == 1.0);
  CHECK_THROWS_AS(sup_distance(u, w), std::invalid_argument);
}

TEST_CASE("hausdorff style pair check on raw vectors") {
  SupVector a{{0.0, 1.0}, false}, b{{1.0, 0.0}, false}, m{{0.5, 0.5}, false};
  CHECK(sup_distance(a, m) == 0.5);
  CHECK(sup_distance(b, m) == 0.5);
}

TEST_CASE("full frame distance map is an isometry, bit for bit") {
  std::mt19937_64 seeds(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(seeds() % 12);
    auto X = as_ptr(gen_random(n, seeds()));
    auto frame = EmbeddingFrame::all_points(X);
    std::vector<SupVector> plain, timed;
    for (int x = 0; x < n; ++x) {
      plain.push_back(frechet(frame, x));
      timed.push_back(timed_frechet(frame, x));
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(sup_distance(plain[x], plain[y]) == X->d(x, y));
        CHECK(sup_distance(timed[x], timed[y]) == X->d(x, y));
        CHECK(timed[x].time() == X->tau(x));
      }
  }
}

TEST_CASE("embedded causality mirrors the host relation") {
  std::mt19937_64 seeds(37);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(seeds() % 10);
    auto X = as_ptr(gen_random(n, seeds()));
    auto rel = causal_relation(*X);
    auto frame = EmbeddingFrame::all_points(X);
    std::vector<SupVector> cloud;
    for (int x = 0; x < n; ++x) cloud.push_back(timed_frechet(frame, x));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        CHECK(target_causal(cloud[p], cloud[q], rel.tolerance) == rel.related(p, q));
  }
}

TEST_CASE("level frames follow the tuple grid with padding kept") {
  auto X = as_ptr(make_line({0.0, 0.3, 0.6, 1.0}));
  SpacePtr fam[] = {X};
  auto H = build_hierarchy(X, plan_for_family(fam, 3));

  auto level1 = EmbeddingFrame::from_level(H, 1);
  CHECK(level1.landmarks == std::vector<int>{0, 2});
  auto level2 = EmbeddingFrame::from_level(H, 2);
  CHECK(level2.landmarks == std::vector<int>{0, 1, 0, 1, 2, 3});
  auto full = EmbeddingFrame::canonical(H);
  CHECK(full.size() == 2 + 6 + 6);
  CHECK(std::vector<int>(full.landmarks.begin(), full.landmarks.begin() + 8) ==
        std::vector<int>{0, 2, 0, 1, 0, 1, 2, 3});
}

TEST_CASE("truncation defect reaches twice the net radius on a spike") {
  // landmark in the middle of three collinear points: both ends look alike
  auto X = as_ptr(make_line({0.0, 0.25, 0.5}));
  EmbeddingFrame frame{X, {1}};
  CHECK(truncation_defect(frame, 0.25) == 0.5);

  EmbeddingFrame all = EmbeddingFrame::all_points(X);
  CHECK(truncation_defect(all, 0.25) == 0.0);

  EmbeddingFrame sparse{X, {0}};
  CHECK_THROWS_AS(truncation_defect(sparse, 0.25), std::invalid_argument);
}

TEST_CASE("cloud csv carries one row per point") {
  auto Xs = make_line({0.0, 1.0});
  auto X = as_ptr(Xs);
  auto frame = EmbeddingFrame::all_points(X);
  std::vector<SupVector> cloud;
  for (int x = 0; x < X->size(); ++x) cloud.push_back(timed_frechet(frame, x));
  std::ostringstream out;
  write_cloud_csv(out, *X, cloud);
  std::istringstream in(out.str());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);  // header plus two points
  CHECK(out.str().find("tau") != std::string::npos);
}
