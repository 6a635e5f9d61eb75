// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "random_collection.hpp"
#include "srl/corpus.hpp"
#include "srl/oracle.hpp"
#include "srl/solvers.hpp"

using namespace srl;

namespace {

constexpr Method kMethods[] = {Method::NewtonRaphson, Method::SteepestDescent,
                               Method::Control};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [failed]");
  }
};

CompiledSystem sys_of(const std::string& name, OperatorFamily fam = OperatorFamily::Standard) {
  return CompiledSystem(builtin(name).collection, fam);
}

SolveResult run(const CompiledSystem& sys, Method m, std::uint64_t seed) {
  auto cfg = SolverConfig::defaults(m);
  cfg.seed = seed;
  return solve(sys, std::nullopt, cfg);
}

double dist(std::span<const double> a, std::span<const double> b) {
  return support::sup_distance(a, b);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string fmt(std::span<const double> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + fmt(x[i]);
  return s + ")";
}

// Counts runs over seeds 1..n that converge within tol of target.
int reach_count(const CompiledSystem& sys, Method m, int n, std::span<const double> target,
                double tol) {
  int hits = 0;
  for (int s = 1; s <= n; ++s) {
    const auto r = run(sys, m, static_cast<std::uint64_t>(s));
    hits += r.status == SolveStatus::Converged && dist(r.x, target) <= tol;
  }
  return hits;
}

Verdict liar() {
  Verdict v;
  const auto sys = sys_of("liar");
  const double half[] = {0.5};
  for (auto m : kMethods) {
    const int hits = reach_count(sys, m, 5, half, 1e-6);
    v.require(hits == 5, std::string(method_name(m)) + " " + std::to_string(hits) + "/5");
  }
  const auto set = grid_solutions(sys, 0.005, default_threshold(sys, 0.005));
  v.require(set.clusters.size() == 1,
            "oracle clusters=" + std::to_string(set.clusters.size()));
  return v;
}

Verdict inconsistent_dualist() {
  Verdict v;
  const auto sys = sys_of("inconsistent_dualist");
  const double sol[] = {0.5, 0.5};
  for (auto m : kMethods) {
    const int hits = reach_count(sys, m, 5, sol, 1e-6);
    v.require(hits == 5, std::string(method_name(m)) + " " + std::to_string(hits) + "/5");
  }
  auto cfg = SolverConfig::defaults(Method::Control);
  cfg.k = 0.1;
  cfg.record_trajectory = true;
  const auto r = solve(sys, std::nullopt, cfg);
  const auto& pts = r.trajectory->points();
  const double expected = std::sqrt(0.82);
  double worst = 0.0;
  bool enough = pts.size() > 101;
  for (std::size_t t = 20; enough && t < 100; ++t) {
    const double ratio = std::hypot(pts[t + 1].x[0] - 0.5, pts[t + 1].x[1] - 0.5) /
                         std::hypot(pts[t].x[0] - 0.5, pts[t].x[1] - 0.5);
    worst = std::max(worst, std::abs(ratio - expected));
  }
  v.require(enough && worst <= 0.01, "contraction ratio max deviation " + fmt(worst));
  return v;
}

Verdict consistent_dualist() {
  Verdict v;
  const auto sys = sys_of("consistent_dualist");
  int converged = 0;
  double worst = 0.0;
  for (auto m : kMethods)
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const auto r = run(sys, m, s);
      if (r.status != SolveStatus::Converged) continue;
      ++converged;
      worst = std::max(worst, std::abs(r.x[0] - r.x[1]));
    }
  v.require(converged > 0 && worst <= 1e-6, std::to_string(converged) +
                                                "/15 converged, max |x1-x2| " + fmt(worst));
  const auto set = grid_solutions(sys, 0.005, default_threshold(sys, 0.005));
  bool covered = true;
  double max_j = 0.0;
  for (std::size_t i = 0; i <= set.intervals; ++i) {
    const double b = static_cast<double>(i) / static_cast<double>(set.intervals);
    const double p[] = {b, b};
    max_j = std::max(max_j, inconsistency(sys, TruthVector({b, b})));
    bool inside = false;
    for (const auto& c : set.clusters) inside = inside || distance_to_cluster(c, p) == 0.0;
    covered = covered && inside;
  }
  v.require(covered && max_j <= 1e-9, "diagonal covered, max J on diagonal " + fmt(max_j));
  return v;
}

Verdict example4() {
  Verdict v;
  const auto std_sys = sys_of("example4");
  int converged = 0;
  double worst = 0.0;
  for (auto m : kMethods)
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const auto r = run(std_sys, m, s);
      if (r.status != SolveStatus::Converged) continue;
      ++converged;
      worst = std::max({worst, std::abs(r.x[0] - r.x[1]), std::abs(r.x[2] - (1 - r.x[0]))});
    }
  v.require(converged > 0 && worst <= 1e-6,
            "standard " + std::to_string(converged) + "/15 converged, max deviation " +
                fmt(worst));

  const auto alg = sys_of("example4", OperatorFamily::Algebraic);
  const auto set = grid_solutions(alg, 0.01, default_threshold(alg, 0.01));
  const std::vector<std::vector<double>> corners{{0, 0, 1}, {1, 1, 0}};
  bool matched = set.clusters.size() == 2;
  for (const auto& want : corners) {
    bool found = false;
    for (const auto& c : set.clusters)
      if (dist(c.representative.values(), want) <= 1e-3)
        found = found || verify_solution(std_sys, c.representative, 1e-12);
    matched = matched && found;
  }
  v.require(matched, "algebraic oracle clusters=" + std::to_string(set.clusters.size()) +
                         ", corners verified under min");
  return v;
}

Verdict example5() {
  Verdict v;
  const auto std_sys = sys_of("example5");
  const double sol[] = {0.95, 0.85, 0.15};
  const int hits = reach_count(std_sys, Method::Control, 10, sol, 1e-3);
  v.require(hits == 10, "standard control " + std::to_string(hits) + "/10");

  const auto sd = steepest_descent(std_sys, TruthVector({0.5, 0.5, 0.5}),
                                   SolverConfig::defaults(Method::SteepestDescent));
  const double reported[] = {0.56, 0.71, 0.59};
  const bool near_reported = dist(sd.x, reported) <= 0.05;
  v.require(sd.status != SolveStatus::Converged && sd.j > 1e-4,
            "sd trap at " + fmt(sd.x) + " J=" + fmt(sd.j) +
                (near_reported ? " (matches the reported trap)"
                               : " (a different nonzero-J point)"));

  const auto alg = sys_of("example5", OperatorFamily::Algebraic);
  const double a[] = {0.6784, 0.7715, 0.4216};
  const double b[] = {0.0473, 0.0872, 0.9473};
  int converged = 0, at_a = 0, at_b = 0;
  std::vector<std::vector<double>> elsewhere;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto r = run(alg, Method::Control, s);
    if (r.status != SolveStatus::Converged) continue;
    ++converged;
    if (dist(r.x, a) <= 1e-3)
      ++at_a;
    else if (dist(r.x, b) <= 1e-3)
      ++at_b;
    else
      elsewhere.push_back(r.x);
  }
  std::string extra;
  if (!elsewhere.empty())
    extra = ", " + std::to_string(elsewhere.size()) + " elsewhere e.g. " + fmt(elsewhere[0]) +
            " J=" + fmt(alg.inconsistency_at(elsewhere[0]));
  v.require(converged > 0 && elsewhere.empty(),
            "algebraic sweep " + std::to_string(converged) + "/20 converged: " +
                std::to_string(at_a) + " at A, " + std::to_string(at_b) + " at B" + extra);
  return v;
}

Verdict example6() {
  Verdict v;
  const auto std_sys = sys_of("example6");
  const double sol[] = {0.875, 0.225, 0.675, 0.875};
  const int hits = reach_count(std_sys, Method::Control, 10, sol, 1e-3);
  v.require(hits == 10, "standard control " + std::to_string(hits) + "/10");
  int failures = 0;
  for (std::uint64_t s = 1; s <= 10; ++s)
    failures += run(std_sys, Method::NewtonRaphson, s).status != SolveStatus::Converged;
  v.require(failures >= 5, "standard nr failures " + std::to_string(failures) + "/10");

  const auto alg = sys_of("example6", OperatorFamily::Algebraic);
  const double asol[] = {0.9507, 0.2942, 0.5586, 0.7993};
  for (auto m : {Method::NewtonRaphson, Method::Control}) {
    const int reached = reach_count(alg, m, 10, asol, 1e-3);
    v.require(reached == 10,
              "algebraic " + std::string(method_name(m)) + " " + std::to_string(reached) + "/10");
  }
  return v;
}

Verdict strengthened_liar() {
  Verdict v;
  const auto sys = sys_of("strengthened_liar");
  const double half[] = {0.5};
  for (auto m : kMethods) {
    const int hits = reach_count(sys, m, 5, half, 1e-6);
    v.require(hits == 5, std::string(method_name(m)) + " " + std::to_string(hits) + "/5");
  }
  return v;
}

Verdict midpoint() {
  Verdict v;
  support::CollectionGenerator gen(8);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto c = gen.collection({.max_size = 5, .max_depth = 4, .boolean_only = true});
    const CompiledSystem sys(c, OperatorFamily::Standard);
    for (double h : residual(sys, TruthVector::midpoint(c.size)))
      worst = std::max(worst, std::abs(h));
  }
  v.require(worst <= 1e-15, "200 collections, max |h(1/2)| " + fmt(worst));
  return v;
}

Verdict existence() {
  Verdict v;
  support::CollectionGenerator gen(9);
  int found = 0;
  for (int i = 0; i < 50; ++i) {
    const auto c = gen.collection({.max_size = 3, .max_depth = 4});
    const CompiledSystem sys(c, kContinuousFamilies[static_cast<std::size_t>(i) % 3]);
    found += !grid_solutions(sys, 0.01, default_threshold(sys, 0.01)).clusters.empty();
  }
  v.require(found == 50, std::to_string(found) + "/50 collections with a cluster");
  return v;
}

double tree_j(const Collection& c, OperatorFamily fam, std::span<const double> x) {
  const auto cx = TruthVector::clamped(x);
  double j = 0.0;
  for (std::size_t m = 0; m < c.size; ++m) {
    const double h = x[m] - eval_level2(c.definitions[m], cx, fam);
    j += h * h;
  }
  return j;
}

Verdict hygiene() {
  Verdict v;
  int smooth_points = 0, disagreements = 0, entries = 0;
  for (const auto& name : corpus_names()) {
    const auto& c = builtin(name).collection;
    for (auto fam : kContinuousFamilies) {
      const CompiledSystem sys(c, fam);
      support::CollectionGenerator gen(10);
      int checked = 0;
      for (int attempt = 0; attempt < 1000000 && checked < 100; ++attempt) {
        const auto x = gen.point(c.size);
        if (sys.kink_margin(x.values()) <= 1e-3) continue;
        ++checked;
        const auto g = grad_inconsistency(sys, x, 1e-6);
        std::vector<double> p = x.vec();
        for (std::size_t i = 0; i < c.size; ++i) {
          p[i] = x[i] + 1e-5;
          const double up = tree_j(c, fam, p);
          p[i] = x[i] - 1e-5;
          const double down = tree_j(c, fam, p);
          p[i] = x[i];
          disagreements += std::abs(g[i] - (up - down) / 2e-5) > 1e-4;
        }
      }
      smooth_points += checked;
      entries += checked == 100;
    }
  }
  const int expected_entries = static_cast<int>(corpus_names().size() * kContinuousFamilies.size());
  v.require(entries == expected_entries && disagreements == 0,
            std::to_string(smooth_points) + " smooth points, " + std::to_string(disagreements) +
                " gradient disagreements");

  int converged = 0, unverified = 0;
  for (const auto& name : corpus_names())
    for (auto fam : kContinuousFamilies) {
      const auto sys = sys_of(name, fam);
      for (auto m : kMethods)
        for (std::uint64_t s = 1; s <= 5; ++s) {
          const auto r = run(sys, m, s);
          if (r.status != SolveStatus::Converged) continue;
          ++converged;
          unverified += !verify_solution(sys, polish(sys, TruthVector(r.x)), 1e-10);
        }
    }
  v.require(unverified == 0, std::to_string(converged) + " converged runs, " +
                                 std::to_string(unverified) + " fail J<=1e-10 after polishing");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"liar", liar},
      {"inconsistent dualist", inconsistent_dualist},
      {"consistent dualist", consistent_dualist},
      {"example 4", example4},
      {"example 5", example5},
      {"example 6", example6},
      {"strengthened liar", strengthened_liar},
      {"mid-point solution", midpoint},
      {"existence on random collections", existence},
      {"numerical hygiene", hygiene},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [label, check] = criteria[i];
    const Verdict v = check();
    failed += !v.pass;
    std::printf("%s criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, label,
                v.detail.str().c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
