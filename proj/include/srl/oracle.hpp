#pragma once

// Brute-force enumeration of approximate solutions on a regular grid.

#include <cstddef>
#include <vector>

#include "srl/compiler.hpp"

namespace srl {

// Grids larger than this many points are refused.
inline constexpr double kMaxGridPoints = 1e8;
inline constexpr std::size_t kMaxOracleDimension = 4;

struct Cluster {
  // Lowest-J grid point of the cluster, and that point after polishing by
  // control steps (equal to grid_point when polishing is off or did not
  // lower J).
  TruthVector grid_point;
  TruthVector representative;
  double grid_j = 0.0;
  double j = 0.0;
  std::size_t size = 0;  // grid points in the cluster
  // Axis-aligned bounding box of the member grid points.
  std::vector<double> lo;
  std::vector<double> hi;
};

struct SolutionSet {
  std::vector<Cluster> clusters;
  double resolution = 0.0;  // effective grid step, 1 / intervals
  std::size_t intervals = 0;
  double threshold = 0.0;
};

struct OracleOptions {
  bool polish = true;
  long polish_steps = 100;
  double polish_k = 0.1;
};

// Grid intervals per axis used for a requested resolution: ceil(1/res)
// modulo rounding noise.
std::size_t grid_intervals(double resolution);

// Evaluates J on the grid {0, 1/n, ..., 1}^M, keeps points with
// J <= threshold and groups them into clusters of grid neighbours (one step
// along one axis). Clusters are ordered by their smallest grid index.
// Throws CostGuardExceeded for M > 4 or more than 1e8 grid points.
SolutionSet grid_solutions(const CompiledSystem& sys, double resolution,
                           double threshold, const OracleOptions& opts = {});

// max(1e-4, (2 L res)^2 M) with L = sensitivity(collection). Large enough
// that the grid point nearest to any exact solution passes.
double default_threshold(const CompiledSystem& sys, double resolution);

struct MidpointCheck {
  bool applicable = false;  // collection uses only Boolean assessments
  bool holds = true;        // vacuously true when not applicable
  double j = 0.0;
};

MidpointCheck check_midpoint(const Collection& c);

bool verify_solution(const CompiledSystem& sys, const TruthVector& x, double tol);

// Sup-norm distance from x to the cluster's bounding box.
double distance_to_cluster(const Cluster& cluster, std::span<const double> x);

}  // namespace srl
