#include "srl/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "srl/error.hpp"

namespace srl {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::NewtonRaphson: return "nr";
    case Method::SteepestDescent: return "sd";
    case Method::Control: return "control";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) noexcept {
  for (auto m : {Method::NewtonRaphson, Method::SteepestDescent, Method::Control})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::string_view status_name(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxItersExceeded: return "max_iters_exceeded";
    case SolveStatus::SingularJacobian: return "singular_jacobian";
    case SolveStatus::Diverged: return "diverged";
  }
  return "unknown";
}

SolverConfig SolverConfig::defaults(Method method) {
  SolverConfig cfg;
  cfg.method = method;
  cfg.k = method == Method::SteepestDescent ? 0.01 : 0.1;
  return cfg;
}

void check_config(const SolverConfig& cfg) {
  if (!(cfg.k > 0.0 && cfg.k <= 1.0))
    throw InvalidArgument("gain k must lie in (0, 1]");
  if (cfg.max_iters < 1) throw InvalidArgument("max_iters must be at least 1");
  if (!(cfg.tol_step > 0.0) || !(cfg.tol_residual > 0.0))
    throw InvalidArgument("tolerances must be positive");
  if (!(cfg.fd_step > 0.0 && cfg.fd_step <= 1e-3))
    throw InvalidArgument("fd_step must lie in (0, 1e-3]");
}

void Trajectory::record(long t, std::span<const double> x, double j) {
  if (t % stride_ != 0) return;
  points_.push_back({t, std::vector<double>(x.begin(), x.end()), j});
  if (points_.size() >= kTrajectoryCap) {
    std::size_t keep = 0;
    for (std::size_t i = 0; i < points_.size(); i += 2)
      points_[keep++] = std::move(points_[i]);
    points_.resize(keep);
    stride_ *= 2;
  }
}

void Trajectory::close(long t, std::span<const double> x, double j) {
  if (!points_.empty() && points_.back().t == t) return;
  points_.push_back({t, std::vector<double>(x.begin(), x.end()), j});
}

TruthVector random_initial(std::size_t m, std::uint64_t seed) {
  if (m < 1) throw InvalidArgument("dimension must be at least 1");
  std::mt19937_64 gen(seed);
  std::vector<double> x(m);
  for (auto& v : x) v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return TruthVector(std::move(x));
}

LinearSolveStatus solve_linear(Matrix a, std::span<double> b, double pivot_tol) {
  const std::size_t n = a.rows;
  if (a.cols != n || b.size() != n)
    throw InvalidArgument("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (!(std::abs(a(pivot, col)) >= pivot_tol)) return LinearSolveStatus::Singular;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * b[c];
    b[i] = s / a(i, i);
  }
  return LinearSolveStatus::Ok;
}

namespace {

constexpr double kDivergenceBound = 10.0;
constexpr double kTikhonov = 1e-8;
// J at or below this is rounding noise: |h| is a few ulps and any further
// update only amplifies that noise (singular Newton systems in particular).
constexpr double kRoundoffInconsistency = 1e-30;

bool inside_box(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(),
                     [](double v) { return v >= 0.0 && v <= 1.0; });
}

// Shared driver. `propose(x, delta)` fills the unclamped update and returns
// false if no update could be formed (singular Newton system).
template <class Propose>
SolveResult iterate(const CompiledSystem& sys, const TruthVector& x0,
                    const SolverConfig& cfg, bool require_small_step,
                    Propose&& propose) {
  check_config(cfg);
  if (x0.size() != sys.dimension())
    throw InvalidArgument("start point has wrong dimension");

  SolveResult result;
  result.existence_warning = !is_continuous(sys.family());
  if (cfg.record_trajectory) result.trajectory.emplace();

  const std::size_t n = sys.dimension();
  std::vector<double> x = x0.vec();
  std::vector<double> delta(n), next(n);
  double j = sys.inconsistency_at(x);
  if (result.trajectory) result.trajectory->record(0, x, j);

  auto finish = [&](SolveStatus status, long t) {
    if (status == SolveStatus::Converged && !inside_box(x))
      status = SolveStatus::Diverged;
    result.status = status;
    result.x = x;
    result.j = j;
    result.iterations = t;
    if (result.trajectory) result.trajectory->close(t, x, j);
    return result;
  };

  for (long t = 0;; ++t) {
    const bool formed = propose(std::span<const double>(x), std::span<double>(delta));
    double step = 0.0;
    if (formed) {
      for (std::size_t m = 0; m < n; ++m) {
        next[m] = x[m] + delta[m];
        if (cfg.clamp) next[m] = std::clamp(next[m], 0.0, 1.0);
        step = std::max(step, std::abs(next[m] - x[m]));
      }
    }
    const bool settled = !require_small_step || (formed && step < cfg.tol_step) ||
                         j <= kRoundoffInconsistency;
    if (j <= cfg.tol_residual && settled) return finish(SolveStatus::Converged, t);
    if (!formed) return finish(SolveStatus::SingularJacobian, t);
    if (t >= cfg.max_iters) return finish(SolveStatus::MaxItersExceeded, t);

    x.swap(next);
    j = sys.inconsistency_at(x);
    const bool finite = std::isfinite(j) &&
                        std::all_of(x.begin(), x.end(),
                                    [](double v) { return std::isfinite(v); });
    const bool escaped =
        !cfg.clamp && std::any_of(x.begin(), x.end(), [](double v) {
          return std::abs(v) > kDivergenceBound;
        });
    if (!finite || escaped) return finish(SolveStatus::Diverged, t + 1);
    if (result.trajectory) result.trajectory->record(t + 1, x, j);
  }
}

}  // namespace

SolveResult newton_raphson(const CompiledSystem& sys, const TruthVector& x0,
                           const SolverConfig& cfg) {
  const std::size_t n = sys.dimension();
  std::vector<double> f(n);
  return iterate(sys, x0, cfg, true,
                 [&](std::span<const double> x, std::span<double> delta) {
                   sys.evaluate(x, f);
                   for (std::size_t m = 0; m < n; ++m) delta[m] = x[m] - f[m];
                   Matrix g = jacobian_at(sys, x, cfg.fd_step, cfg.clamp);
                   std::vector<double> rhs(delta.begin(), delta.end());
                   if (solve_linear(g, rhs) == LinearSolveStatus::Singular) {
                     for (std::size_t m = 0; m < n; ++m) g(m, m) += kTikhonov;
                     rhs.assign(delta.begin(), delta.end());
                     if (solve_linear(g, rhs) == LinearSolveStatus::Singular)
                       return false;
                   }
                   for (std::size_t m = 0; m < n; ++m) delta[m] = -rhs[m];
                   return true;
                 });
}

SolveResult steepest_descent(const CompiledSystem& sys, const TruthVector& x0,
                             const SolverConfig& cfg) {
  return iterate(sys, x0, cfg, false,
                 [&](std::span<const double> x, std::span<double> delta) {
                   const auto g = gradient_at(sys, x, cfg.fd_step, cfg.clamp);
                   for (std::size_t m = 0; m < g.size(); ++m)
                     delta[m] = -cfg.k * g[m];
                   return true;
                 });
}

SolveResult control_iteration(const CompiledSystem& sys, const TruthVector& x0,
                              const SolverConfig& cfg) {
  std::vector<double> f(sys.dimension());
  return iterate(sys, x0, cfg, true,
                 [&](std::span<const double> x, std::span<double> delta) {
                   sys.evaluate(x, f);
                   for (std::size_t m = 0; m < f.size(); ++m)
                     delta[m] = -cfg.k * (x[m] - f[m]);
                   return true;
                 });
}

SolveResult solve(const CompiledSystem& sys, const std::optional<TruthVector>& x0,
                  const SolverConfig& cfg) {
  const TruthVector start =
      x0 ? *x0 : random_initial(sys.dimension(), cfg.seed);
  switch (cfg.method) {
    case Method::NewtonRaphson: return newton_raphson(sys, start, cfg);
    case Method::SteepestDescent: return steepest_descent(sys, start, cfg);
    case Method::Control: return control_iteration(sys, start, cfg);
  }
  throw InvalidArgument("unknown method");
}

TruthVector polish(const CompiledSystem& sys, const TruthVector& x, long steps,
                   double k) {
  std::vector<double> cur = x.vec();
  std::vector<double> f(cur.size());
  for (long s = 0; s < steps; ++s) {
    sys.evaluate(cur, f);
    for (std::size_t m = 0; m < cur.size(); ++m)
      cur[m] = std::clamp(cur[m] - k * (cur[m] - f[m]), 0.0, 1.0);
  }
  return TruthVector(std::move(cur));
}

}  // namespace srl
