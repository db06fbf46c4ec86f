#include "tmet/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace tmet {

namespace {

FiniteTimedMetricSpace blank_space(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  FiniteTimedMetricSpace s;
  s.name = name;
  for (int i = 0; i < n; ++i) s.points.push_back(std::to_string(i));
  s.dist.assign(n, std::vector<double>(n, 0.0));
  s.time.assign(n, 0.0);
  return s;
}

}  // namespace

FiniteTimedMetricSpace gen_cycle(int n, double scale) {
  auto s = blank_space("cycle" + std::to_string(n), n);
  const double step = scale * 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.dist[i][j] = step * std::min(std::abs(i - j), n - std::abs(i - j));
  s.tau_max = 0.0;
  s.diameter_bound = step * (n / 2);
  return s;
}

FiniteTimedMetricSpace gen_interval(int n, double scale) {
  auto s = blank_space("interval" + std::to_string(n), n);
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) x[i] = n == 1 ? 0.0 : scale * i / (n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.dist[i][j] = std::fabs(x[i] - x[j]);
  s.time = x;
  s.tau_max = scale;
  s.diameter_bound = scale;
  return s;
}

FiniteTimedMetricSpace gen_minkowski_diamond(int m, double T) {
  if (m < 1) throw std::invalid_argument("need at least one grid line");
  auto s = blank_space("diamond" + std::to_string(m), m * m);
  std::vector<double> t, x;
  for (int iu = 0; iu < m; ++iu)
    for (int iv = 0; iv < m; ++iv) {
      const double u = m == 1 ? 0.0 : T * iu / (m - 1);
      const double v = m == 1 ? 0.0 : T * iv / (m - 1);
      t.push_back((u + v) / 2.0);
      x.push_back((v - u) / 2.0);
    }
  const int n = m * m;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      s.dist[p][q] = std::max(std::fabs(t[p] - t[q]), std::fabs(x[p] - x[q]));
  s.time = t;
  s.tau_max = T;
  s.diameter_bound = T;
  return s;
}

FiniteTimedMetricSpace gen_random(int n, std::uint64_t seed, bool timed) {
  constexpr int kSteps = 8;  // lattice pitch 1/8, exact in binary
  constexpr int kDim = 3;
  if (n > (kSteps + 1) * (kSteps + 1) * (kSteps + 1))
    throw std::invalid_argument("lattice too small for that many points");

  std::mt19937_64 rng(seed);
  std::set<std::array<int, kDim>> seen;
  std::vector<std::array<int, kDim>> grid;
  while (static_cast<int>(grid.size()) < n) {
    std::array<int, kDim> cell{};
    for (int d = 0; d < kDim; ++d)
      cell[d] = static_cast<int>(rng() % (kSteps + 1));
    if (seen.insert(cell).second) grid.push_back(cell);
  }

  auto coord = [](int k) { return std::ldexp(static_cast<double>(k), -3); };
  auto s = blank_space("random" + std::to_string(n), n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double best = 0.0;
      for (int d = 0; d < kDim; ++d)
        best = std::max(best,
                        std::fabs(coord(grid[p][d]) - coord(grid[q][d])));
      s.dist[p][q] = best;
    }
  if (timed) {
    int lowest = grid[0][0];
    for (const auto& cell : grid) lowest = std::min(lowest, cell[0]);
    for (int p = 0; p < n; ++p)
      s.time[p] = coord(grid[p][0]) - coord(lowest);
  }
  s.tau_max = *std::max_element(s.time.begin(), s.time.end());
  s.diameter_bound = 1.0;
  return s;
}

SpacePtr as_ptr(FiniteTimedMetricSpace space) {
  return std::make_shared<const FiniteTimedMetricSpace>(std::move(space));
}

FiniteTimedMetricSpace normalize_space(const FiniteTimedMetricSpace& space) {
  FiniteTimedMetricSpace s = space;
  const double scale = std::max(1.0, space.diameter_bound);
  for (auto& row : s.dist)
    for (auto& v : row) v /= scale;
  for (auto& t : s.time) t /= scale;
  s.tau_max /= scale;
  s.diameter_bound /= scale;
  return s;
}

ScaleLaw scale_law_from_text(const std::string& text) {
  if (text == "1/j") return ScaleLaw::shrinking;
  if (text == "1+1/j") return ScaleLaw::settling;
  if (text == "const" || text == "1") return ScaleLaw::constant;
  throw std::invalid_argument("unknown scale law: " + text);
}

double scale_at(ScaleLaw law, int j) {
  switch (law) {
    case ScaleLaw::shrinking: return 1.0 / j;
    case ScaleLaw::settling: return 1.0 + 1.0 / j;
    case ScaleLaw::constant: return 1.0;
  }
  throw std::logic_error("bad scale law");
}

std::vector<SpacePtr> gen_family(const FamilySpec& spec) {
  if (spec.members < 1) throw std::invalid_argument("need at least one member");
  std::vector<FiniteTimedMetricSpace> raw;
  for (int j = 1; j <= spec.members; ++j) {
    const double scale = scale_at(spec.law, j);
    FiniteTimedMetricSpace s;
    if (spec.generator == "cycle") s = gen_cycle(spec.n, scale);
    else if (spec.generator == "interval") s = gen_interval(spec.n, scale);
    else if (spec.generator == "diamond") s = gen_minkowski_diamond(spec.n, scale);
    else if (spec.generator == "random")
      s = gen_random(spec.n, spec.seed + static_cast<std::uint64_t>(j) - 1);
    else throw std::invalid_argument("unknown generator: " + spec.generator);
    s.name += "#" + std::to_string(j);
    raw.push_back(std::move(s));
  }

  double tau = 0.0, bound = 0.0;
  for (const auto& s : raw) {
    tau = std::max(tau, s.tau_max);
    bound = std::max(bound, s.diameter_bound);
  }
  std::vector<SpacePtr> out;
  for (auto& s : raw) {
    s.tau_max = tau;
    s.diameter_bound = bound;
    out.push_back(as_ptr(std::move(s)));
  }
  return out;
}

}  // namespace tmet
