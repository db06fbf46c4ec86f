#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmet/space.hpp"

namespace tmet {

// n points on a circle of circumference 2*pi*scale, arc-length metric,
// constant time slot.
FiniteTimedMetricSpace gen_cycle(int n, double scale = 1.0);

// n evenly spaced points on [0, scale] with tau equal to position.
FiniteTimedMetricSpace gen_interval(int n, double scale = 1.0);

// m x m grid over the causal diamond between (0,0) and (T,0): null
// coordinates u,v range over [0,T], d = max(|dt|,|dx|), tau = t.
FiniteTimedMetricSpace gen_minkowski_diamond(int m, double T = 1.0);

// n distinct points on the dyadic lattice (multiples of 1/8 in [0,1]^3),
// sup metric, tau = first coordinate shifted to start at zero.  All
// derived quantities stay exact in double arithmetic.
FiniteTimedMetricSpace gen_random(int n, std::uint64_t seed, bool timed = true);

SpacePtr as_ptr(FiniteTimedMetricSpace space);

// Copy with metric and time divided by max(1, diameter_bound).
FiniteTimedMetricSpace normalize_space(const FiniteTimedMetricSpace& space);

enum class ScaleLaw { shrinking, settling, constant };  // 1/j, 1+1/j, 1

ScaleLaw scale_law_from_text(const std::string& text);
double scale_at(ScaleLaw law, int j);

struct FamilySpec {
  std::string generator = "cycle";  // cycle | interval | diamond | random
  int n = 8;
  int members = 4;
  ScaleLaw law = ScaleLaw::constant;
  std::uint64_t seed = 1;
};

// Family with shared tau_max and diameter_bound so the members are
// equibounded by construction.
std::vector<SpacePtr> gen_family(const FamilySpec& spec);

}  // namespace tmet
