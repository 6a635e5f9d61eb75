#pragma once

// Iterative solvers for h(x) = x - f(x) = 0:
//
//   newton_raphson     x <- x - G(x)^{-1} h(x)
//   steepest_descent   x <- x - k dJ/dx
//   control_iteration  x <- x - k (x - f(x))
//
// Each one is a deterministic discrete dynamical system; the optional
// trajectory records the visited states x(t) and J(x(t)).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "srl/compiler.hpp"

namespace srl {

enum class Method { NewtonRaphson, SteepestDescent, Control };

enum class SolveStatus { Converged, MaxItersExceeded, SingularJacobian, Diverged };

std::string_view method_name(Method m) noexcept;  // nr, sd, control
std::optional<Method> method_from_name(std::string_view name) noexcept;
std::string_view status_name(SolveStatus s) noexcept;

struct SolverConfig {
  Method method = Method::Control;
  double k = 0.1;  // step gain, unused by Newton-Raphson
  long max_iters = 10000;
  double tol_step = 1e-10;      // sup-norm of the update
  double tol_residual = 1e-12;  // threshold on J
  double fd_step = kDefaultFdStep;
  bool clamp = true;
  std::uint64_t seed = 1;  // start point when none is given
  bool record_trajectory = false;

  static SolverConfig defaults(Method method);
};

// Throws InvalidArgument when a field is out of range.
void check_config(const SolverConfig& cfg);

struct TrajectoryPoint {
  long t = 0;
  std::vector<double> x;
  double j = 0.0;
};

// Every iteration is stored until kTrajectoryCap points; then every other
// point is dropped and the recording stride doubles.
inline constexpr std::size_t kTrajectoryCap = 100000;

class Trajectory {
 public:
  void record(long t, std::span<const double> x, double j);
  // Appends (t, x, j) unless t is already the last recorded index.
  void close(long t, std::span<const double> x, double j);

  const std::vector<TrajectoryPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  long stride() const noexcept { return stride_; }

 private:
  std::vector<TrajectoryPoint> points_;
  long stride_ = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::MaxItersExceeded;
  // Final iterate. Lies in [0,1]^M unless clamping was disabled and the
  // run diverged.
  std::vector<double> x;
  double j = 0.0;
  long iterations = 0;
  std::optional<Trajectory> trajectory;
  // Set when the family is not continuous: existence of a solution is not
  // guaranteed.
  bool existence_warning = false;
};

// Deterministic uniform point of [0,1]^M: mt19937_64 seeded with `seed`,
// each coordinate built from the top 53 bits of one draw, (u >> 11) * 2^-53.
TruthVector random_initial(std::size_t m, std::uint64_t seed);

SolveResult newton_raphson(const CompiledSystem& sys, const TruthVector& x0,
                           const SolverConfig& cfg);
SolveResult steepest_descent(const CompiledSystem& sys, const TruthVector& x0,
                             const SolverConfig& cfg);
SolveResult control_iteration(const CompiledSystem& sys, const TruthVector& x0,
                              const SolverConfig& cfg);

// Dispatches on cfg.method; starts from random_initial(M, cfg.seed) when x0
// is empty.
SolveResult solve(const CompiledSystem& sys, const std::optional<TruthVector>& x0,
                  const SolverConfig& cfg);

// `steps` clamped control updates with gain k.
TruthVector polish(const CompiledSystem& sys, const TruthVector& x,
                   long steps = 1000, double k = 0.1);

enum class LinearSolveStatus { Ok, Singular };

// Solves a x = b in place by Gaussian elimination with partial pivoting.
// Reports Singular when a pivot magnitude falls below `pivot_tol`.
LinearSolveStatus solve_linear(Matrix a, std::span<double> b,
                               double pivot_tol = 1e-12);

}  // namespace srl
