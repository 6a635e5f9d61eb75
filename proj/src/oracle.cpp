#include "srl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <string>

#include "srl/error.hpp"
#include "srl/solvers.hpp"

namespace srl {

std::size_t grid_intervals(double resolution) {
  if (!(resolution > 0.0 && resolution <= 1.0))
    throw InvalidArgument("resolution must lie in (0, 1]");
  const double inv = 1.0 / resolution;
  const double nearest = std::round(inv);
  if (std::abs(inv - nearest) <= 1e-9 * nearest)
    return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(inv));
}

double default_threshold(const CompiledSystem& sys, double resolution) {
  const double l = static_cast<double>(sensitivity(sys.collection()));
  const double r = 2.0 * l * resolution;
  return std::max(1e-4, r * r * static_cast<double>(sys.dimension()));
}

SolutionSet grid_solutions(const CompiledSystem& sys, double resolution,
                           double threshold, const OracleOptions& opts) {
  const std::size_t dim = sys.dimension();
  const std::size_t n = grid_intervals(resolution);
  const std::size_t per_axis = n + 1;
  if (dim > kMaxOracleDimension)
    throw CostGuardExceeded("grid oracle supports at most " +
                            std::to_string(kMaxOracleDimension) +
                            " sentences, got " + std::to_string(dim));
  const double points = std::pow(static_cast<double>(per_axis), dim);
  if (points > kMaxGridPoints)
    throw CostGuardExceeded("grid of " + std::to_string(points) +
                            " points exceeds the limit of 1e8");
  if (!(threshold >= 0.0)) throw InvalidArgument("threshold must be >= 0");

  const std::size_t total = static_cast<std::size_t>(points);
  std::vector<std::size_t> stride(dim);
  for (std::size_t d = 0, s = 1; d < dim; ++d, s *= per_axis) stride[d] = s;

  std::vector<double> x(dim);
  auto decode = [&](std::size_t idx) {
    for (std::size_t d = 0; d < dim; ++d) {
      const std::size_t i = (idx / stride[d]) % per_axis;
      x[d] = static_cast<double>(i) / static_cast<double>(n);
    }
  };

  // 0 = rejected, 1 = below threshold, 2 = already assigned to a cluster.
  std::vector<std::uint8_t> state(total, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    decode(idx);
    if (sys.inconsistency_at(x) <= threshold) state[idx] = 1;
  }

  SolutionSet out;
  out.resolution = 1.0 / static_cast<double>(n);
  out.intervals = n;
  out.threshold = threshold;

  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < total; ++seed) {
    if (state[seed] != 1) continue;
    state[seed] = 2;
    queue.push_back(seed);

    std::size_t best = seed;
    double best_j = INFINITY;
    std::size_t size = 0;
    std::vector<double> lo(dim, 1.0), hi(dim, 0.0);
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      ++size;
      decode(idx);
      const double j = sys.inconsistency_at(x);
      if (j < best_j || (j == best_j && idx < best)) {
        best_j = j;
        best = idx;
      }
      for (std::size_t d = 0; d < dim; ++d) {
        lo[d] = std::min(lo[d], x[d]);
        hi[d] = std::max(hi[d], x[d]);
        const std::size_t i = (idx / stride[d]) % per_axis;
        if (i > 0 && state[idx - stride[d]] == 1) {
          state[idx - stride[d]] = 2;
          queue.push_back(idx - stride[d]);
        }
        if (i + 1 < per_axis && state[idx + stride[d]] == 1) {
          state[idx + stride[d]] = 2;
          queue.push_back(idx + stride[d]);
        }
      }
    }

    decode(best);
    Cluster c{TruthVector(x), TruthVector(x), best_j, best_j, size, lo, hi};
    if (opts.polish) {
      auto polished = polish(sys, c.grid_point, opts.polish_steps, opts.polish_k);
      const double pj = inconsistency(sys, polished);
      if (pj < c.grid_j) {
        c.representative = std::move(polished);
        c.j = pj;
      }
    }
    out.clusters.push_back(std::move(c));
  }
  return out;
}

MidpointCheck check_midpoint(const Collection& c) {
  MidpointCheck out;
  if (!is_boolean_collection(c)) return out;
  out.applicable = true;
  const CompiledSystem sys(c, OperatorFamily::Standard);
  const auto r = residual(sys, TruthVector::midpoint(c.size));
  out.holds = std::all_of(r.begin(), r.end(), [](double v) { return v == 0.0; });
  for (double v : r) out.j += v * v;
  return out;
}

bool verify_solution(const CompiledSystem& sys, const TruthVector& x, double tol) {
  return inconsistency(sys, x) <= tol;
}

double distance_to_cluster(const Cluster& cluster, std::span<const double> x) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gap = std::max({cluster.lo[i] - x[i], x[i] - cluster.hi[i], 0.0});
    d = std::max(d, gap);
  }
  return d;
}

}  // namespace srl
