#include "tmet/embedding.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tmet {

double sup_distance(const SupVector& u, const SupVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("sup_distance: length mismatch");
  double best = 0.0;
  for (int k = 0; k < u.size(); ++k)
    best = std::max(best, std::fabs(u.coords[k] - v.coords[k]));
  return best;
}

bool target_causal(const SupVector& u, const SupVector& v, double eps) {
  if (!u.timed || !v.timed)
    throw std::invalid_argument("target_causal needs timed vectors");
  return std::fabs((u.time() - v.time()) - sup_distance(u, v)) <= eps;
}

EmbeddingFrame EmbeddingFrame::all_points(SpacePtr X) {
  EmbeddingFrame f;
  f.host = std::move(X);
  f.landmarks.resize(f.host->size());
  for (int p = 0; p < f.host->size(); ++p) f.landmarks[p] = p;
  return f;
}

EmbeddingFrame EmbeddingFrame::from_level(const NetHierarchy& H, int level) {
  if (level < 1 || level > H.plan.depth)
    throw std::out_of_range("frame level");
  EmbeddingFrame f;
  f.host = H.host;
  std::vector<int> frontier = H.roots;
  for (int i = 2; i <= level; ++i) {
    std::vector<int> next;
    next.reserve(frontier.size() * H.plan.sizes[i - 1]);
    for (int p : frontier) {
      const auto& slots = H.child_slots(i - 1, p);
      next.insert(next.end(), slots.begin(), slots.end());
    }
    frontier = std::move(next);
  }
  f.landmarks = std::move(frontier);
  return f;
}

EmbeddingFrame EmbeddingFrame::canonical(const NetHierarchy& H) {
  EmbeddingFrame f;
  f.host = H.host;
  for (int i = 1; i <= H.plan.depth; ++i) {
    auto level = from_level(H, i);
    f.landmarks.insert(f.landmarks.end(), level.landmarks.begin(),
                       level.landmarks.end());
    if (f.landmarks.size() > 4'000'000)
      throw std::runtime_error("canonical frame too large");
  }
  return f;
}

SupVector frechet(const EmbeddingFrame& frame, int x) {
  if (x < 0 || x >= frame.host->size()) throw std::out_of_range("point index");
  SupVector v;
  v.coords.reserve(frame.landmarks.size());
  for (int l : frame.landmarks) v.coords.push_back(frame.host->dist[l][x]);
  return v;
}

SupVector timed_frechet(const EmbeddingFrame& frame, int x) {
  if (x < 0 || x >= frame.host->size()) throw std::out_of_range("point index");
  SupVector v;
  v.timed = true;
  v.coords.reserve(frame.landmarks.size() + 1);
  v.coords.push_back(frame.host->time[x]);
  for (int l : frame.landmarks) v.coords.push_back(frame.host->dist[l][x]);
  return v;
}

double truncation_defect(const EmbeddingFrame& frame, double eps,
                         std::span<const std::pair<int, int>> pairs) {
  const auto& X = *frame.host;
  for (int p = 0; p < X.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (int l : frame.landmarks) best = std::min(best, X.dist[l][p]);
    if (!(best <= eps))
      throw std::invalid_argument("frame is not an eps-net of the host");
  }

  auto defect = [&](int x, int y) {
    double spread = 0.0;
    for (int l : frame.landmarks)
      spread = std::max(spread, std::fabs(X.dist[l][x] - X.dist[l][y]));
    return X.dist[x][y] - spread;
  };

  double worst = 0.0;
  if (pairs.empty()) {
    for (int x = 0; x < X.size(); ++x)
      for (int y = x + 1; y < X.size(); ++y)
        worst = std::max(worst, defect(x, y));
  } else {
    for (const auto& [x, y] : pairs) worst = std::max(worst, defect(x, y));
  }
  return worst;
}

void write_cloud_csv(std::ostream& out, const FiniteTimedMetricSpace& X,
                     std::span<const SupVector> cloud) {
  if (cloud.empty()) throw std::invalid_argument("empty cloud");
  const bool timed = cloud[0].timed;
  out << "point";
  if (timed) out << ",tau";
  const int width = cloud[0].size() - (timed ? 1 : 0);
  for (int k = 0; k < width; ++k) out << ",c" << k;
  out << '\n';
  out.precision(17);
  for (size_t p = 0; p < cloud.size(); ++p) {
    out << X.points.at(p);
    for (double c : cloud[p].coords) out << ',' << c;
    out << '\n';
  }
}

}  // namespace tmet
