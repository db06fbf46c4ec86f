#include "tmet/nets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tmet {

std::string tuple_text(const IndexTuple& t, char sep) {
  std::string s;
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(t[k]);
  }
  return s;
}

double level_radius(int level) { return std::ldexp(1.0, -level); }

LevelPlan LevelPlan::with_sizes(std::vector<int> sizes) {
  LevelPlan plan;
  plan.depth = static_cast<int>(sizes.size());
  plan.sizes = std::move(sizes);
  for (int i = 1; i <= plan.depth; ++i) plan.eps.push_back(level_radius(i));
  return plan;
}

long long LevelPlan::tuple_count(int level) const {
  long long count = 1;
  for (int i = 0; i < level; ++i) {
    count *= sizes[i];
    if (count > (1LL << 50)) throw std::runtime_error("tuple grid overflow");
  }
  return count;
}

namespace {

// Greedy closed-ball cover of `candidates` (ascending point indices):
// keep a candidate when no kept center is within `radius` of it yet.
std::vector<int> greedy_cover(const FiniteTimedMetricSpace& X,
                              const std::vector<int>& candidates,
                              double radius) {
  std::vector<int> centers;
  for (int p : candidates) {
    bool covered = false;
    for (int c : centers)
      if (X.dist[c][p] <= radius) { covered = true; break; }
    if (!covered) centers.push_back(p);
  }
  return centers;
}

std::vector<int> ball_points(const FiniteTimedMetricSpace& X, int center,
                             double radius) {
  std::vector<int> pts;
  for (int p = 0; p < X.size(); ++p)
    if (X.dist[center][p] <= radius) pts.push_back(p);
  return pts;
}

std::vector<int> all_points(const FiniteTimedMetricSpace& X) {
  std::vector<int> pts(X.size());
  for (int p = 0; p < X.size(); ++p) pts[p] = p;
  return pts;
}

}  // namespace

int covering_number(const FiniteTimedMetricSpace& X, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("covering radius must be positive");
  return static_cast<int>(greedy_cover(X, all_points(X), radius).size());
}

int stability_depth(std::span<const SpacePtr> family, int cap) {
  if (family.empty()) throw std::invalid_argument("empty family");
  double min_pos = std::numeric_limits<double>::infinity();
  for (const auto& X : family)
    min_pos = std::min(min_pos, X->min_positive_distance());
  for (int i = 1; i < cap; ++i)
    if (level_radius(i) < 0.5 * min_pos) return i;
  return cap;
}

LevelPlan plan_for_family(std::span<const SpacePtr> family, int depth) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (depth < 0) throw std::invalid_argument("negative depth");
  std::vector<int> sizes(depth, 1);
  for (const auto& X : family) {
    std::set<int> parents;
    for (int c : greedy_cover(*X, all_points(*X), level_radius(1)))
      parents.insert(c);
    sizes[0] = std::max(sizes[0], static_cast<int>(parents.size()));
    for (int i = 2; i <= depth; ++i) {
      std::set<int> next;
      for (int p : parents) {
        auto kids = greedy_cover(*X, ball_points(*X, p, level_radius(i - 1)),
                                 level_radius(i));
        sizes[i - 1] = std::max(sizes[i - 1], static_cast<int>(kids.size()));
        next.insert(kids.begin(), kids.end());
      }
      parents = std::move(next);
    }
  }
  return LevelPlan::with_sizes(std::move(sizes));
}

NetHierarchy build_hierarchy(SpacePtr X, const LevelPlan& plan) {
  if (!X) throw std::invalid_argument("null space");
  NetHierarchy H;
  H.plan = plan;
  H.host = X;
  if (plan.depth == 0) return H;

  auto pad = [](std::vector<int> slots, int size) {
    if (slots.empty()) throw std::logic_error("empty slot list");
    while (static_cast<int>(slots.size()) < size) slots.push_back(slots.front());
    return slots;
  };

  auto picked = greedy_cover(*X, all_points(*X), level_radius(1));
  if (static_cast<int>(picked.size()) > plan.sizes[0])
    throw std::runtime_error("plan too small at level 1: need " +
                             std::to_string(picked.size()) + " slots");
  H.roots = pad(picked, plan.sizes[0]);

  // Lexicographically smallest tuple reaching each current parent, kept for
  // error messages.
  std::map<int, IndexTuple> witness;
  for (int k = static_cast<int>(picked.size()) - 1; k >= 0; --k)
    witness[picked[k]] = IndexTuple{k + 1};
  H.level_points.emplace_back();
  for (const auto& [p, t] : witness) H.level_points.back().push_back(p);

  for (int i = 2; i <= plan.depth; ++i) {
    std::map<int, std::vector<int>> level;
    std::map<int, IndexTuple> next;
    for (const auto& [p, tuple] : witness) {
      auto kids = greedy_cover(*X, ball_points(*X, p, level_radius(i - 1)),
                               level_radius(i));
      if (static_cast<int>(kids.size()) > plan.sizes[i - 1])
        throw std::runtime_error(
            "plan too small at level " + std::to_string(i) + " under parent " +
            tuple_text(tuple) + ": need " + std::to_string(kids.size()) +
            " slots");
      for (int k = 0; k < static_cast<int>(kids.size()); ++k) {
        IndexTuple t = tuple;
        t.push_back(k + 1);
        auto it = next.find(kids[k]);
        if (it == next.end() || t < it->second) next[kids[k]] = std::move(t);
      }
      level.emplace(p, pad(std::move(kids), plan.sizes[i - 1]));
    }
    H.children.push_back(std::move(level));
    witness = std::move(next);
    H.level_points.emplace_back();
    for (const auto& [p, t] : witness) H.level_points.back().push_back(p);
  }

  H.at_stability =
      static_cast<int>(H.level_points.back().size()) == X->size() &&
      level_radius(plan.depth) < X->min_positive_distance();
  return H;
}

int NetHierarchy::center(std::span<const int> tuple) const {
  if (tuple.empty() || static_cast<int>(tuple.size()) > plan.depth)
    throw std::out_of_range("tuple depth out of range");
  if (tuple[0] < 1 || tuple[0] > plan.sizes[0])
    throw std::out_of_range("tuple entry out of range");
  int point = roots[tuple[0] - 1];
  for (size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i] < 1 || tuple[i] > plan.sizes[i])
      throw std::out_of_range("tuple entry out of range");
    point = children[i - 1].at(point)[tuple[i] - 1];
  }
  return point;
}

const std::vector<int>& NetHierarchy::child_slots(int level,
                                                  int parent_point) const {
  return children.at(level - 1).at(parent_point);
}

HierarchyReport verify_hierarchy(const NetHierarchy& H) {
  HierarchyReport report;
  if (H.plan.depth == 0) return report;
  const auto& X = *H.host;

  // Re-derive the reachable centers level by level instead of trusting the
  // cached level_points, so damaged structures cannot vouch for themselves.
  std::set<int> frontier(H.roots.begin(), H.roots.end());
  for (int i = 1; i <= H.plan.depth; ++i) {
    const double eps = level_radius(i);
    for (int p = 0; p < X.size(); ++p) {
      double best = std::numeric_limits<double>::infinity();
      int arg = -1;
      for (int c : frontier)
        if (X.dist[c][p] < best) { best = X.dist[c][p]; arg = c; }
      if (!(best <= eps))
        report.items.push_back({HierarchyDefect::covering, i, {p, arg}, best});
    }

    if (i == H.plan.depth) break;
    std::set<int> next;
    for (int p : frontier) {
      const auto it = H.children[i - 1].find(p);
      if (it == H.children[i - 1].end()) {
        report.items.push_back({HierarchyDefect::refinement, i, {p}, 0.0});
        continue;
      }
      const auto& slots = it->second;
      next.insert(slots.begin(), slots.end());
      for (int c : slots)
        if (!(X.dist[p][c] <= 2.0 * eps))
          report.items.push_back(
              {HierarchyDefect::proximity, i, {p, c}, X.dist[p][c]});
      for (int q = 0; q < X.size(); ++q) {
        if (X.dist[p][q] > eps) continue;
        double best = std::numeric_limits<double>::infinity();
        for (int c : slots) best = std::min(best, X.dist[c][q]);
        if (!(best <= level_radius(i + 1)))
          report.items.push_back({HierarchyDefect::refinement, i, {p, q}, best});
      }
    }
    frontier = std::move(next);
  }
  return report;
}

nlohmann::json hierarchy_to_json(const NetHierarchy& H) {
  nlohmann::json centers = nlohmann::json::object();
  long long total = 0;
  for (int i = 1; i <= H.plan.depth; ++i) total += H.plan.tuple_count(i);
  if (total > 2'000'000)
    throw std::runtime_error("tuple grid too large to serialize");

  std::vector<std::pair<IndexTuple, int>> frontier;
  for (int a = 1; a <= H.plan.sizes[0]; ++a)
    frontier.emplace_back(IndexTuple{a}, H.roots[a - 1]);
  for (int i = 1; i <= H.plan.depth; ++i) {
    nlohmann::json level = nlohmann::json::object();
    for (const auto& [tuple, point] : frontier) level[tuple_text(tuple, ',')] = point;
    centers[std::to_string(i)] = std::move(level);
    if (i == H.plan.depth) break;
    std::vector<std::pair<IndexTuple, int>> next;
    next.reserve(frontier.size() * H.plan.sizes[i]);
    for (const auto& [tuple, point] : frontier) {
      const auto& slots = H.children[i - 1].at(point);
      for (int a = 1; a <= H.plan.sizes[i]; ++a) {
        IndexTuple t = tuple;
        t.push_back(a);
        next.emplace_back(std::move(t), slots[a - 1]);
      }
    }
    frontier = std::move(next);
  }

  return nlohmann::json{
      {"plan", {{"depth", H.plan.depth}, {"sizes", H.plan.sizes}}},
      {"centers", std::move(centers)}};
}

}  // namespace tmet
