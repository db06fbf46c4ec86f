#include "doctest.h"

#include <cmath>

#include "tmet/convergence.hpp"
#include "tmet/generators.hpp"
#include "helpers.hpp"

using namespace tmet;
using tmet::testing::make_line;

namespace {

std::vector<SpacePtr> constant_interval_family(int n, int members) {
  std::vector<SpacePtr> fam;
  auto s = as_ptr(gen_interval(n));
  for (int j = 0; j < members; ++j) fam.push_back(s);
  return fam;
}

}  // namespace

TEST_CASE("identical members embed onto the same cloud") {
  auto fam = embed_family(constant_interval_family(5, 3));
  REQUIRE(fam.members() == 3);
  auto a = fam.cloud(1);
  auto b = fam.cloud(3);
  CHECK(hausdorff_sup(a, b) == 0.0);
  CHECK(fam.union_cloud().size() == 15);
  CHECK(fam.frames[0].size() == fam.frames[2].size());
}

TEST_CASE("hausdorff bound between two point and one point spaces") {
  SupVector a{{0.0, 1.0}, false}, b{{1.0, 0.0}, false}, m{{0.5, 0.5}, false};
  std::vector<SupVector> A{a, b}, B{m};
  CHECK(hausdorff_sup(A, B) == 0.5);
  std::vector<SupVector> empty;
  CHECK_THROWS_AS(hausdorff_sup(A, empty), std::invalid_argument);
}

TEST_CASE("constant family synthesizes its own member as the limit") {
  auto fam = embed_family(constant_interval_family(5, 4));
  auto limit = synthesize_limit(fam);

  REQUIRE(limit.class_count() == 5);
  CHECK(limit.diagnostics.max_oscillation == 0.0);
  CHECK(limit.diagnostics.nonconvergent_pairs.empty());
  CHECK(limit.diagnostics.max_class_spread == 0.0);

  const auto& X = *fam.spaces[3];
  for (int a = 0; a < 5; ++a) {
    CHECK(limit.limit_time[a] == X.tau(limit.class_rep_points[a]));
    for (int b = 0; b < 5; ++b)
      CHECK(limit.limit_dist[a][b] ==
            X.d(limit.class_rep_points[a], limit.class_rep_points[b]));
  }

  // the quotient is a valid timed metric space in its own right
  auto out = validate_space(RawSpace::from(limit.to_space()));
  CHECK(out.ok());

  // every member sits at distance zero from the limit, and the address
  // gaps vanish, because nothing moves along the family
  for (int j = 1; j <= 4; ++j) {
    CHECK(hausdorff_to_limit(fam, limit, j) == 0.0);
    auto gaps = uniform_address_gap(fam, limit, j);
    CHECK(gaps.sup_time_gap == 0.0);
    CHECK(gaps.sup_dist_gap == 0.0);
    CHECK(gaps.sup_vector_gap == 0.0);
  }
}

TEST_CASE("classes deduplicate the tuple grid") {
  auto fam = embed_family(constant_interval_family(3, 2));
  auto limit = synthesize_limit(fam);
  CHECK(limit.class_count() == 3);
  // every grid tuple lands in some class, at every level
  for (int i = 1; i <= fam.plan.depth; ++i)
    for (long long r = 0; r < fam.plan.tuple_count(i); ++r) {
      const int c = limit.class_of(i, r);
      CHECK(c >= 0);
      CHECK(c < 3);
    }
  // representing tuples resolve back to the representative points
  for (int c = 0; c < limit.class_count(); ++c)
    CHECK(limit.class_of(limit.class_reps[c]) == c);
}

TEST_CASE("shrinking cycles glue to a single class") {
  FamilySpec spec;
  spec.generator = "cycle";
  spec.n = 8;
  spec.members = 16;
  spec.law = ScaleLaw::shrinking;
  auto fam = embed_family(gen_family(spec));

  SynthesisOptions opts;
  opts.delta_glue = 0.2;  // beats the final diameter pi/16
  auto limit = synthesize_limit(fam, opts);
  CHECK(limit.class_count() == 1);
  CHECK(limit.limit_time[0] == 0.0);
  CHECK(limit.diagnostics.glue_tolerance == 0.2);
  CHECK(hausdorff_to_limit(fam, limit, 16) <=
        uniform_address_gap(fam, limit, 16).sup_vector_gap + 1e-15);
}

TEST_CASE("drifting members are reported, not hidden") {
  // two genuinely different shapes alternating: the tail never settles
  auto a = as_ptr(gen_random(6, 101));
  auto b = as_ptr(gen_random(6, 202));
  auto fam = embed_family({a, b, a, b, a, b});
  auto limit = synthesize_limit(fam);
  CHECK(limit.diagnostics.max_oscillation > 0.0);
  CHECK_FALSE(limit.diagnostics.nonconvergent_pairs.empty());
}

TEST_CASE("settling intervals land within the final scale") {
  FamilySpec spec;
  spec.generator = "interval";
  spec.n = 6;
  spec.members = 12;
  spec.law = ScaleLaw::settling;
  auto fam = embed_family(gen_family(spec));
  auto limit = synthesize_limit(fam);

  REQUIRE(limit.class_count() == 6);
  const double last_scale = 1.0 + 1.0 / 12.0;
  double worst = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const int pa = limit.class_rep_points[a], pb = limit.class_rep_points[b];
      const double want = last_scale * std::abs(pa - pb) / 5.0;
      worst = std::max(worst, std::fabs(limit.limit_dist[a][b] - want));
    }
  CHECK(worst <= 1e-12);
  for (double defect : limit.diagnostics.net_defect) CHECK(defect >= 0.0);
}

TEST_CASE("limit json keeps the diagnostics block") {
  auto fam = embed_family(constant_interval_family(3, 2));
  auto limit = synthesize_limit(fam);
  auto doc = limit_to_json(limit);
  CHECK(doc.contains("points"));
  CHECK(doc.at("diagnostics").contains("max_oscillation"));
  CHECK(doc.at("diagnostics").contains("nonconvergent_pairs"));
  CHECK(doc.at("diagnostics").contains("glue_tolerance"));
}

TEST_CASE("lipschitz functions carry through the time slot") {
  const int n = 6, J = 8;
  const double K = 2.0, F_max = 1.0;
  auto fam_spaces = constant_interval_family(n, J);
  std::vector<std::vector<double>> F(J, std::vector<double>(n));
  for (int j = 0; j < J; ++j)
    for (int p = 0; p < n; ++p)
      F[j][p] = (1.0 + 1.0 / (j + 1)) * 0.5 * p / (n - 1.0);

  auto res = arzela_ascoli(fam_spaces, F, K, F_max);
  REQUIRE(res.synthesis.class_count() == n);
  // the limit function is read off the final member
  for (int c = 0; c < n; ++c) {
    const int p = res.synthesis.class_rep_points[c];
    CHECK(std::fabs(res.limit_function[c] - F[J - 1][p]) <= 1e-12);
  }
  CHECK(res.gaps.back() <= 1e-12);

  // violations of the advertised bounds are rejected up front
  auto bad = F;
  bad[0][0] = 5.0;
  CHECK_THROWS_AS(arzela_ascoli(fam_spaces, bad, K, F_max), std::runtime_error);
  auto steep = F;
  steep[0] = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(arzela_ascoli(fam_spaces, steep, K, F_max), std::runtime_error);
}

TEST_CASE("dropping a constant zero time slot changes nothing") {
  FamilySpec spec;
  spec.generator = "cycle";  // cycles carry constant zero time already
  spec.n = 6;
  spec.members = 5;
  spec.law = ScaleLaw::settling;
  auto spaces = gen_family(spec);

  auto timed = embed_family(spaces, 0, true);
  auto plain = embed_family(spaces, 0, false);
  for (int j = 1; j <= 5; ++j) {
    auto tc = timed.cloud(j);
    auto pc = plain.cloud(j);
    REQUIRE(tc.size() == pc.size());
    for (size_t k = 0; k < tc.size(); ++k) {
      REQUIRE(tc[k].size() == pc[k].size() + 1);
      CHECK(tc[k].coords[0] == 0.0);
      for (int c = 0; c < pc[k].size(); ++c)
        CHECK(tc[k].coords[c + 1] == pc[k].coords[c]);
    }
  }

  auto lt = synthesize_limit(timed);
  auto lp = synthesize_limit(plain);
  CHECK(lt.class_reps == lp.class_reps);
  CHECK(lt.limit_dist == lp.limit_dist);
  for (int j = 1; j <= 5; ++j) {
    auto gt = uniform_address_gap(timed, lt, j);
    auto gp = uniform_address_gap(plain, lp, j);
    CHECK(gt.sup_dist_gap == gp.sup_dist_gap);
    CHECK(gt.sup_vector_gap == gp.sup_vector_gap);
    CHECK(gt.sup_time_gap == 0.0);
    CHECK(hausdorff_to_limit(timed, lt, j) == hausdorff_to_limit(plain, lp, j));
  }
}
