#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "tmet/space.hpp"

namespace tmet {

// Index tuple (a_1, ..., a_i) with 1-based entries, a_k in [1, sizes[k-1]].
using IndexTuple = std::vector<int>;

std::string tuple_text(const IndexTuple& t, char sep = '.');

// Dyadic level plan: level i uses radius eps_i = 2^-i. sizes[i-1] is the
// slot count N_i shared by every space using the plan.
struct LevelPlan {
  int depth = 0;
  std::vector<int> sizes;
  std::vector<double> eps;

  static LevelPlan with_sizes(std::vector<int> sizes);
  double eps_at(int level) const { return eps.at(level - 1); }  // 1-based
  long long tuple_count(int level) const;  // product of sizes[0..level-1]
};

double level_radius(int level);  // 2^-level, exact

// Greedy covering count with closed balls of the given radius: scan points
// in ascending index order, keep a point when no kept center is within the
// radius yet.
int covering_number(const FiniteTimedMetricSpace& X, double radius);

// Centers for every level tuple, stored compactly: the children of a tuple
// depend only on the parent's center point, so each level keeps one child
// list per distinct parent center. Slot lists are padded to the plan size
// by repeating the first chosen child.
struct NetHierarchy {
  LevelPlan plan;
  SpacePtr host;
  std::vector<int> roots;                            // level 1, size N_1
  std::vector<std::map<int, std::vector<int>>> children;  // [i-1]: level-i parent -> level-(i+1) slots
  std::vector<std::vector<int>> level_points;        // distinct centers per level, sorted
  bool at_stability = false;  // every point is its own deepest-level center

  int center(std::span<const int> tuple) const;  // 1-based entries
  const std::vector<int>& child_slots(int level, int parent_point) const;
};

// Smallest depth whose radius drops below half the least positive pairwise
// distance over the family, capped (deeper levels only repeat).
int stability_depth(std::span<const SpacePtr> family, int cap = 20);

// Shared slot counts: the per-level maximum of what the greedy construction
// needs across the family.
LevelPlan plan_for_family(std::span<const SpacePtr> family, int depth);

// Builds the hierarchy for one space under a (possibly family-wide) plan.
// Throws std::runtime_error naming the level and parent tuple if a slot
// count is too small.
NetHierarchy build_hierarchy(SpacePtr X, const LevelPlan& plan);

enum class HierarchyDefect { covering, proximity, refinement };

struct HierarchyViolation {
  HierarchyDefect kind;
  int level;
  std::vector<int> where;  // point indices: offender, then context
  double gap;
};

struct HierarchyReport {
  std::vector<HierarchyViolation> items;
  bool empty() const { return items.empty(); }
};

// Re-derives the invariants from the stored maps: every point within eps_i
// of a level-i center, every child within 2*eps_i of its parent, every
// parent ball covered by its child balls. Closed-ball comparisons, no slack.
HierarchyReport verify_hierarchy(const NetHierarchy& H);

// {"plan": {"depth", "sizes"}, "centers": {"<level>": {"a,b,...": point}}}.
// Materializes the full tuple grid; intended for desk-scale hierarchies.
nlohmann::json hierarchy_to_json(const NetHierarchy& H);

}  // namespace tmet
