#include "tmet/oracles.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tmet {

namespace {

constexpr double kGuard = 1e6;

double pow_count(int base, int exp) {
  double c = 1;
  for (int i = 0; i < exp; ++i) c *= base;
  return c;
}

// Max-min Hausdorff between clouds under the sup metric, local to the
// oracle on purpose.
double cloud_hausdorff(const std::vector<std::vector<double>>& A,
                       const std::vector<std::vector<double>>& B) {
  auto directed = [](const std::vector<std::vector<double>>& from,
                     const std::vector<std::vector<double>>& to) {
    double worst = 0.0;
    for (const auto& u : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& v : to) {
        double sup = 0.0;
        for (size_t k = 0; k < u.size(); ++k)
          sup = std::max(sup, std::fabs(u[k] - v[k]));
        best = std::min(best, sup);
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(A, B), directed(B, A));
}

// A choice of landmark sequences boils down to the set of aligned landmark
// pairs it runs through: repeats only duplicate coordinates, and order does
// not matter to the sup norm. So the search ranges over column sets with
// both projections onto, and the Hausdorff value only grows when columns
// are added. Minimal covers have at most m + n - 1 columns, which caps the
// masks worth visiting.
double kappa_search(const FiniteTimedMetricSpace& X,
                    const FiniteTimedMetricSpace& Y, bool timed) {
  const int m = X.size(), n = Y.size();
  const int cells = m * n;
  if (cells > 20 || pow_count(2, cells) > kGuard)
    throw std::invalid_argument("landmark pairing search too large");

  std::vector<std::pair<int, int>> columns;
  columns.reserve(cells);
  std::vector<std::vector<double>> cloud_x(m), cloud_y(n);
  double best = std::numeric_limits<double>::infinity();

  const int max_cols = m + n - 1;
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    if (std::popcount(mask) > max_cols) continue;
    std::uint32_t seen_x = 0, seen_y = 0;
    columns.clear();
    for (int c = 0; c < cells; ++c)
      if (mask & (1u << c)) {
        const int x = c / n, y = c % n;
        seen_x |= 1u << x;
        seen_y |= 1u << y;
        columns.emplace_back(x, y);
      }
    if (seen_x != (1u << m) - 1 || seen_y != (1u << n) - 1) continue;

    for (int x = 0; x < m; ++x) {
      auto& row = cloud_x[x];
      row.clear();
      if (timed) row.push_back(X.time[x]);
      for (const auto& [a, b] : columns) row.push_back(X.dist[a][x]);
    }
    for (int y = 0; y < n; ++y) {
      auto& row = cloud_y[y];
      row.clear();
      if (timed) row.push_back(Y.time[y]);
      for (const auto& [a, b] : columns) row.push_back(Y.dist[b][y]);
    }
    best = std::min(best, cloud_hausdorff(cloud_x, cloud_y));
  }
  return best;
}

}  // namespace

double gh_exact(const FiniteTimedMetricSpace& X, const FiniteTimedMetricSpace& Y) {
  const int m = X.size(), n = Y.size();
  if (pow_count(n, m) * pow_count(m, n) > kGuard)
    throw std::invalid_argument("correspondence search too large");

  // Pair list of a candidate correspondence: (x, f(x)) for all x, then
  // (g(y), y) for all y.
  std::vector<int> f(m, 0), g(n, 0);
  std::vector<std::pair<int, int>> pairs(m + n);
  double best = std::numeric_limits<double>::infinity();

  auto distortion_below = [&](double cap) {
    double dis = 0.0;
    const int total = m + n;
    for (int a = 0; a < total; ++a)
      for (int b = a + 1; b < total; ++b) {
        const double gap = std::fabs(X.dist[pairs[a].first][pairs[b].first] -
                                     Y.dist[pairs[a].second][pairs[b].second]);
        if (gap > dis) {
          dis = gap;
          if (dis >= cap) return cap;
        }
      }
    return dis;
  };

  while (true) {
    for (int x = 0; x < m; ++x) pairs[x] = {x, f[x]};
    for (int y = 0; y < n; ++y) pairs[m + y] = {g[y], y};
    best = std::min(best, distortion_below(best));

    int i = 0;
    for (; i < m; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i < m) continue;
    for (i = 0; i < n; ++i) {
      if (++g[i] < m) break;
      g[i] = 0;
    }
    if (i == n) break;
  }
  return 0.5 * best;
}

double exact_kappa_gh(const FiniteTimedMetricSpace& X,
                      const FiniteTimedMetricSpace& Y) {
  return kappa_search(X, Y, false);
}

double exact_kappa_th(const FiniteTimedMetricSpace& X,
                      const FiniteTimedMetricSpace& Y) {
  return kappa_search(X, Y, true);
}

}  // namespace tmet
