#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tmet/nets.hpp"

namespace tmet {

// Point of the sup-metric target space. Timed vectors carry the time value
// in coordinate 0.
struct SupVector {
  std::vector<double> coords;
  bool timed = false;

  int size() const { return static_cast<int>(coords.size()); }
  double time() const { return coords.at(0); }  // timed vectors only
};

// Coordinate-wise sup distance; the inputs must have equal length.
double sup_distance(const SupVector& u, const SupVector& v);

// u in the causal future of v when the time gap equals the sup distance up
// to eps. Both vectors must be timed.
bool target_causal(const SupVector& u, const SupVector& v, double eps);

// Ordered landmark list in a host space. Distances to the landmarks give
// the embedding coordinates; order is what makes coordinates comparable
// across spaces.
struct EmbeddingFrame {
  SpacePtr host;
  std::vector<int> landmarks;

  int size() const { return static_cast<int>(landmarks.size()); }

  static EmbeddingFrame all_points(SpacePtr X);
  // Level-i tuple grid in lexicographic order (padding duplicates kept, so
  // slots line up across spaces sharing the plan).
  static EmbeddingFrame from_level(const NetHierarchy& H, int level);
  // Levels 1..L concatenated; the shared coordinate system for families.
  static EmbeddingFrame canonical(const NetHierarchy& H);
};

SupVector frechet(const EmbeddingFrame& frame, int x);
SupVector timed_frechet(const EmbeddingFrame& frame, int x);

// Worst gap d(x,y) - sup_k |d(l_k,x) - d(l_k,y)| over the sample pairs (all
// pairs when the sample is empty). Requires the landmarks to form an
// eps-net of the host; the defect lies in [0, 2*eps].
double truncation_defect(const EmbeddingFrame& frame, double eps,
                         std::span<const std::pair<int, int>> pairs = {});

// CSV: header, then one row per point: label, [tau,] coordinates.
void write_cloud_csv(std::ostream& out, const FiniteTimedMetricSpace& X,
                     std::span<const SupVector> cloud);

}  // namespace tmet
