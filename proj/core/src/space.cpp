#include "tmet/space.hpp"

#include <algorithm>
#include <cmath>

namespace tmet {

double FiniteTimedMetricSpace::min_positive_distance() const {
  double best = std::numeric_limits<double>::infinity();
  const int n = size();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (dist[p][q] > 0.0) best = std::min(best, dist[p][q]);
  return best;
}

RawSpace RawSpace::from(const FiniteTimedMetricSpace& s) {
  return RawSpace{s.name, s.points, s.dist, s.time, s.tau_max, s.diameter_bound};
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::shape: return "shape";
    case ViolationKind::negative: return "negative";
    case ViolationKind::asymmetry: return "asymmetry";
    case ViolationKind::diagonal: return "diagonal";
    case ViolationKind::indefinite: return "indefinite";
    case ViolationKind::triangle: return "triangle";
    case ViolationKind::time_range: return "time_range";
    case ViolationKind::lipschitz: return "lipschitz";
    case ViolationKind::bound: return "bound";
  }
  return "unknown";
}

namespace {

void floyd_warshall(std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
}

}  // namespace

ValidationOutcome validate_space(const RawSpace& raw, double tol,
                                 const ValidateOptions& opts) {
  ValidationOutcome out;
  auto flag = [&](ViolationKind k, std::vector<int> where, std::string msg) {
    out.violations.push_back({k, std::move(where), std::move(msg)});
  };

  const int n = static_cast<int>(raw.points.size());
  if (n == 0) {
    flag(ViolationKind::shape, {}, "space has no points");
    return out;
  }
  if (static_cast<int>(raw.dist.size()) != n ||
      static_cast<int>(raw.time.size()) != n) {
    flag(ViolationKind::shape, {}, "dist/time size does not match point count");
    return out;
  }
  for (int p = 0; p < n; ++p) {
    if (static_cast<int>(raw.dist[p].size()) != n) {
      flag(ViolationKind::shape, {p}, "dist row " + std::to_string(p) + " is ragged");
      return out;
    }
  }

  auto dist = raw.dist;
  auto time = raw.time;

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (dist[p][q] < 0.0)
        flag(ViolationKind::negative, {p, q}, "negative distance");

  // Symmetrize within tolerance, report beyond it.
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double gap = std::fabs(dist[p][q] - dist[q][p]);
      if (gap > tol) {
        flag(ViolationKind::asymmetry, {p, q}, "asymmetric pair");
      } else if (gap > 0.0) {
        const double avg = 0.5 * (dist[p][q] + dist[q][p]);
        dist[p][q] = dist[q][p] = avg;
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    if (std::fabs(dist[p][p]) > tol)
      flag(ViolationKind::diagonal, {p}, "nonzero diagonal");
    else
      dist[p][p] = 0.0;
  }

  if (!opts.allow_zero_distance) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (dist[p][q] <= 0.0)
          flag(ViolationKind::indefinite, {p, q},
               "distinct points at zero distance");
  }

  if (opts.repair_triangle) floyd_warshall(dist);

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        if (dist[p][r] > dist[p][q] + dist[q][r] + tol)
          flag(ViolationKind::triangle, {p, q, r}, "triangle inequality fails");

  double max_dist = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) max_dist = std::max(max_dist, dist[p][q]);

  const double tau_max =
      raw.tau_max.value_or(*std::max_element(time.begin(), time.end()));
  for (int p = 0; p < n; ++p) {
    if (time[p] < -tol || time[p] > tau_max + tol)
      flag(ViolationKind::time_range, {p}, "time outside [0, tau_max]");
    else
      time[p] = std::clamp(time[p], 0.0, tau_max);
  }

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (std::fabs(time[p] - time[q]) > dist[p][q] + tol)
        flag(ViolationKind::lipschitz, {p, q}, "time jump exceeds distance");

  const double bound = raw.diameter_bound.value_or(max_dist);
  if (max_dist > bound + tol)
    flag(ViolationKind::bound, {}, "distance exceeds diameter_bound");
  else if (max_dist > bound)
    for (auto& row : dist)
      for (auto& v : row) v = std::min(v, bound);  // clamp slack within tol

  if (out.violations.empty()) {
    out.space = FiniteTimedMetricSpace{raw.name,  raw.points, std::move(dist),
                                       std::move(time), tau_max, bound};
  }
  return out;
}

double diameter(const FiniteTimedMetricSpace& X) {
  double best = 0.0;
  for (int p = 0; p < X.size(); ++p)
    for (int q = 0; q < X.size(); ++q) best = std::max(best, X.dist[p][q]);
  return best;
}

bool CausalRelation::related(int p, int q) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(p, q));
}

double default_causal_tolerance(const FiniteTimedMetricSpace& X) {
  return 1e-9 * std::max(1.0, X.diameter_bound);
}

CausalRelation causal_relation(const FiniteTimedMetricSpace& X, double eps_causal) {
  CausalRelation rel;
  rel.tolerance = eps_causal;
  for (int p = 0; p < X.size(); ++p)
    for (int q = 0; q < X.size(); ++q)
      if (std::fabs((X.time[p] - X.time[q]) - X.dist[p][q]) <= eps_causal)
        rel.pairs.emplace_back(p, q);
  return rel;
}

CausalRelation causal_relation(const FiniteTimedMetricSpace& X) {
  return causal_relation(X, default_causal_tolerance(X));
}

}  // namespace tmet
