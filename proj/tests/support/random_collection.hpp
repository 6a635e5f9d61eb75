#pragma once

// Random collections and points for property tests.

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "srl/compiler.hpp"
#include "srl/formula.hpp"

namespace srl::support {

struct RandomCollectionOptions {
  std::size_t min_size = 1;
  std::size_t max_size = 5;
  // Nesting depth of a definition, counting both formula levels.
  int max_depth = 4;
  bool boolean_only = false;  // values in {0,1} and relation Equal only
  bool allow_not_equal = true;
};

class CollectionGenerator {
 public:
  explicit CollectionGenerator(std::uint64_t seed) : rng_(seed) {}

  Collection collection(const RandomCollectionOptions& opts) {
    std::uniform_int_distribution<std::size_t> size(opts.min_size, opts.max_size);
    Collection c;
    c.size = size(rng_);
    for (std::size_t m = 0; m < c.size; ++m)
      c.definitions.push_back(level2(c.size, opts.max_depth, opts));
    return c;
  }

  TruthVector point(std::size_t m) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(m);
    for (auto& v : x) v = u(rng_);
    return TruthVector(std::move(x));
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Level1Formula level1(std::size_t m, int depth) {
    if (depth <= 0 || pick(3) == 0)
      return Level1Formula::var(1 + static_cast<std::size_t>(pick(static_cast<int>(m))));
    switch (pick(3)) {
      case 0: return Level1Formula::conj(level1(m, depth - 1), level1(m, depth - 1));
      case 1: return Level1Formula::disj(level1(m, depth - 1), level1(m, depth - 1));
      default: return Level1Formula::negation(level1(m, depth - 1));
    }
  }

  double value(const RandomCollectionOptions& opts) {
    if (opts.boolean_only) return pick(2) == 0 ? 0.0 : 1.0;
    // Three decimals, like hand-written assessments.
    return std::round(uniform(0.0, 1.0) * 1000.0) / 1000.0;
  }

  Level2Formula leaf(std::size_t m, int depth, const RandomCollectionOptions& opts) {
    Assessment a{level1(m, std::max(0, depth - 1)), Relation::Equal, value(opts)};
    if (opts.allow_not_equal && !opts.boolean_only && pick(4) == 0) a.relation = Relation::NotEqual;
    return Level2Formula::leaf(std::move(a));
  }

  Level2Formula level2(std::size_t m, int depth, const RandomCollectionOptions& opts) {
    if (depth <= 1 || pick(3) == 0) return leaf(m, depth, opts);
    switch (pick(3)) {
      case 0:
        return Level2Formula::conj(level2(m, depth - 1, opts), level2(m, depth - 1, opts));
      case 1:
        return Level2Formula::disj(level2(m, depth - 1, opts), level2(m, depth - 1, opts));
      default: return Level2Formula::negation(level2(m, depth - 1, opts));
    }
  }

  std::mt19937_64 rng_;
};

inline double sup_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace srl::support
