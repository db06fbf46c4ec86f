#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tmet {

// Finite metric space with a time function that is Lipschitz-one with
// respect to the metric. Instances are produced by validate_space and
// treated as immutable afterwards.
struct FiniteTimedMetricSpace {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<double>> dist;  // symmetric, zero diagonal
  std::vector<double> time;               // values in [0, tau_max]
  double tau_max = 0.0;
  double diameter_bound = 0.0;            // >= every entry of dist

  int size() const { return static_cast<int>(points.size()); }
  double d(int p, int q) const { return dist[p][q]; }
  double tau(int p) const { return time[p]; }

  // Smallest nonzero pairwise distance; +inf for a one-point space.
  double min_positive_distance() const;
};

using SpacePtr = std::shared_ptr<const FiniteTimedMetricSpace>;

// Candidate data before validation. tau_max / diameter_bound may be
// absent; validation fills them from the data.
struct RawSpace {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<double>> dist;
  std::vector<double> time;
  std::optional<double> tau_max;
  std::optional<double> diameter_bound;

  static RawSpace from(const FiniteTimedMetricSpace& s);
};

enum class ViolationKind {
  shape,          // ragged matrix, size mismatch, empty space
  negative,       // dist entry < 0
  asymmetry,      // |d(p,q) - d(q,p)| beyond tolerance
  diagonal,       // nonzero diagonal beyond tolerance
  indefinite,     // zero distance between distinct points
  triangle,       // d(p,r) > d(p,q) + d(q,r) beyond tolerance
  time_range,     // time outside [0, tau_max] beyond tolerance
  lipschitz,      // |tau(p) - tau(q)| > d(p,q) beyond tolerance
  bound,          // dist entry exceeds diameter_bound
};

struct Violation {
  ViolationKind kind;
  std::vector<int> where;  // witnessing point indices
  std::string message;
};

const char* violation_name(ViolationKind k);

struct ValidateOptions {
  // Permit zero distance between distinct points (used for pre-quotient
  // data inside limit synthesis).
  bool allow_zero_distance = false;
  // Replace the matrix by its shortest-path closure before the triangle
  // check. Off by default; repairs are never silent.
  bool repair_triangle = false;
};

struct ValidationOutcome {
  std::optional<FiniteTimedMetricSpace> space;  // set iff violations empty
  std::vector<Violation> violations;
  bool ok() const { return space.has_value(); }
};

// Checks every space invariant. Asymmetry within tol is repaired by
// averaging the two entries; diagonal and time-range slack within tol is
// clamped; triangle violations within tol are accepted as-is. Anything
// beyond tol lands in the violation list.
ValidationOutcome validate_space(const RawSpace& raw, double tol = 0.0,
                                 const ValidateOptions& opts = {});

double diameter(const FiniteTimedMetricSpace& X);

// p is in the causal future of q when tau(p) - tau(q) = d(p, q) up to
// eps_causal.
struct CausalRelation {
  double tolerance = 0.0;
  std::vector<std::pair<int, int>> pairs;  // sorted (p, q), p in J+(q)
  bool related(int p, int q) const;
};

// Default slack: 1e-9 * max(1, diameter_bound).
double default_causal_tolerance(const FiniteTimedMetricSpace& X);

CausalRelation causal_relation(const FiniteTimedMetricSpace& X, double eps_causal);
CausalRelation causal_relation(const FiniteTimedMetricSpace& X);

}  // namespace tmet
