#pragma once

#include "tmet/space.hpp"

namespace tmet {

// Exact references for tiny spaces, computed by exhaustive search and kept
// deliberately independent of the embedding/convergence code paths. Each
// throws std::invalid_argument when the search space would exceed roughly
// 10^6 candidates.

// Half the least distortion over all correspondences, enumerated as pairs
// of covering maps X->Y and Y->X.
double gh_exact(const FiniteTimedMetricSpace& X, const FiniteTimedMetricSpace& Y);

// Least Hausdorff distance between landmark-coordinate clouds over all
// aligned landmark sequences. Sequences may revisit points, so the search
// ranges over the column sets they trace: subsets of X x Y whose
// projections cover both sides.
double exact_kappa_gh(const FiniteTimedMetricSpace& X,
                      const FiniteTimedMetricSpace& Y);

// Timed variant: clouds carry the time value in coordinate 0. Zero exactly
// when some bijection preserves both distances and times.
double exact_kappa_th(const FiniteTimedMetricSpace& X,
                      const FiniteTimedMetricSpace& Y);

}  // namespace tmet
