#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "tmet/generators.hpp"
#include "tmet/space.hpp"

namespace tmet::testing {

// One-dimensional space from positions on a line, tau = position.
inline FiniteTimedMetricSpace make_line(std::vector<double> pos, bool timed = true) {
  FiniteTimedMetricSpace s;
  s.name = "line";
  const int n = static_cast<int>(pos.size());
  for (int i = 0; i < n; ++i) s.points.push_back(std::to_string(i));
  s.dist.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.dist[i][j] = std::fabs(pos[i] - pos[j]);
  const double lo = *std::min_element(pos.begin(), pos.end());
  const double hi = *std::max_element(pos.begin(), pos.end());
  s.time.assign(n, 0.0);
  if (timed)
    for (int i = 0; i < n; ++i) s.time[i] = pos[i] - lo;
  s.tau_max = timed ? hi - lo : 0.0;
  s.diameter_bound = hi - lo;
  return s;
}

inline FiniteTimedMetricSpace make_space(std::vector<std::vector<double>> dist,
                                         std::vector<double> time) {
  FiniteTimedMetricSpace s;
  s.name = "adhoc";
  const int n = static_cast<int>(dist.size());
  for (int i = 0; i < n; ++i) s.points.push_back(std::to_string(i));
  s.dist = std::move(dist);
  s.time = std::move(time);
  s.tau_max = *std::max_element(s.time.begin(), s.time.end());
  double d = 0.0;
  for (const auto& row : s.dist)
    for (double v : row) d = std::max(d, v);
  s.diameter_bound = d;
  return s;
}

inline FiniteTimedMetricSpace time_reversed(const FiniteTimedMetricSpace& x) {
  FiniteTimedMetricSpace s = x;
  s.name += "-reversed";
  for (auto& t : s.time) t = x.tau_max - t;
  return s;
}

// Exhaustive search for a bijection preserving both the metric and the
// time slot, kept independent of the comparison oracles on purpose.
inline bool exists_timed_isometry(const FiniteTimedMetricSpace& a,
                                  const FiniteTimedMetricSpace& b,
                                  double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (std::fabs(a.time[i] - b.time[perm[i]]) > tol) ok = false;
      for (int j = 0; j < n && ok; ++j)
        if (std::fabs(a.dist[i][j] - b.dist[perm[i]][perm[j]]) > tol) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tmet::testing
