#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <utility>
#include <vector>

#include "tmet/embedding.hpp"

namespace tmet {

// Family of spaces sharing one level plan, each embedded through its own
// canonical frame so that coordinate k means the same tuple in every
// member. Members are addressed 1-based (j = 1..J). Clouds are built on
// demand; only hierarchies and landmark lists are stored.
struct EmbeddedFamily {
  LevelPlan plan;
  std::vector<SpacePtr> spaces;
  std::vector<NetHierarchy> hierarchies;
  std::vector<EmbeddingFrame> frames;
  bool timed = true;
  double family_diameter = 0.0;  // max member diameter_bound

  int members() const { return static_cast<int>(spaces.size()); }
  int coordinates() const { return frames.empty() ? 0 : frames[0].size(); }

  SupVector embed_point(int j, int x) const;       // member j, point x
  std::vector<SupVector> cloud(int j) const;
  std::vector<SupVector> union_cloud() const;      // all member clouds
};

// depth 0 picks the stability depth of the family (capped).
EmbeddedFamily embed_family(std::vector<SpacePtr> spaces, int depth = 0,
                            bool timed = true);

// Exact Hausdorff distance between finite clouds under the sup metric.
double hausdorff_sup(std::span<const SupVector> A, std::span<const SupVector> B);

// Hausdorff distance between the two canonical clouds; an upper bound for
// the ordering-optimized distance the oracles compute.
double timed_hausdorff_ub(SpacePtr X1, SpacePtr X2, int depth = 0);

struct SynthesisOptions {
  int tail_window = 3;
  double tol_cauchy = -1.0;    // auto: 1e-3 * max(1, family diameter)
  double delta_glue = -1.0;    // auto: eps_L
  double tol_invariant = -1.0; // auto: 1e-9 * max(1, family diameter)
  // Class distance as the max over cross pairs instead of the distance of
  // the lexicographically smallest representatives.
  bool class_distance_max = false;
};

struct SynthesisDiagnostics {
  double max_oscillation = 0.0;  // distance and time drift over the tail window
  std::vector<std::pair<IndexTuple, IndexTuple>> nonconvergent_pairs;
  double glue_tolerance = 0.0;
  double max_class_spread = 0.0;        // final-member spread inside classes
  std::vector<double> net_defect;       // per level: worst min-distance to a
                                        // level-i class in the limit
};

// Limit read off at the final member: tuples are glued into zero-distance
// classes (union-find at delta_glue) and the class representatives carry
// the limit metric and time.
struct LimitSynthesis {
  LevelPlan plan;
  std::vector<IndexTuple> class_reps;     // lex-min member tuple per class
  std::vector<int> class_rep_points;      // that tuple's point in the final member
  std::vector<std::vector<double>> limit_dist;
  std::vector<double> limit_time;
  std::vector<std::vector<int>> levels_present;  // sorted levels per class
  double tau_max = 0.0;          // metadata of the final member
  double diameter_bound = 0.0;
  SynthesisDiagnostics diagnostics;

  int class_count() const { return static_cast<int>(class_reps.size()); }
  int class_of(int level, long long rank) const;   // flat grid lookup
  int class_of(const IndexTuple& tuple) const;

  // Classes as a space: points named by representative address text.
  FiniteTimedMetricSpace to_space() const;

  std::vector<std::vector<int>> class_by_level;  // [level-1][rank] -> class
};

// Throws std::runtime_error if the synthesized data breaks the triangle or
// Lipschitz conditions beyond tol_invariant. Non-convergence within the
// tail window is reported in the diagnostics, never thrown.
LimitSynthesis synthesize_limit(const EmbeddedFamily& family,
                                const SynthesisOptions& opts = {});

// Space document of to_space() plus a "diagnostics" block.
nlohmann::json limit_to_json(const LimitSynthesis& limit);

struct AddressGaps {
  double sup_time_gap = 0.0;
  double sup_dist_gap = 0.0;
  double sup_vector_gap = 0.0;
};

// Exhaustive gaps between member j and the limit over the deepest-level
// address grid.
AddressGaps uniform_address_gap(const EmbeddedFamily& family,
                                const LimitSynthesis& limit, int j);

// One embedded vector per class, in the family coordinate system.
std::vector<SupVector> limit_cloud(const EmbeddedFamily& family,
                                   const LimitSynthesis& limit);

// Hausdorff distance between member j's cloud and the limit cloud; bounded
// by sup_vector_gap via the address correspondence.
double hausdorff_to_limit(const EmbeddedFamily& family,
                          const LimitSynthesis& limit, int j);

struct ArzelaAscoliResult {
  EmbeddedFamily family;          // time slot replaced by F_j / K
  LimitSynthesis synthesis;
  std::vector<double> limit_function;  // K * limit time, per class
  std::vector<double> gaps;            // per member: sup |F_j - F_limit| on addresses
};

// Uniformly bounded K-Lipschitz functions F[j] over a shared-metric family,
// folded into the time slot and run through the synthesis.
ArzelaAscoliResult arzela_ascoli(const std::vector<SpacePtr>& spaces,
                                 const std::vector<std::vector<double>>& F,
                                 double K, double F_max, int depth = 0,
                                 const SynthesisOptions& opts = {});

}  // namespace tmet
