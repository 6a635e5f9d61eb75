#pragma once

// Fuzzy operator families: a t-norm (and), t-conorm (or) and negation (not).
//
//   family     and(x,y)                 or(x,y)                  not(x)
//   standard   min(x,y)                 max(x,y)                 1-x
//   algebraic  x*y                      x+y-x*y                  1-x
//   bounded    max(0,x+y-1)             min(1,x+y)               1-x
//   drastic    x if y=1, y if x=1,      x if y=0, y if x=0,      1-x
//              else 0                   else 1

#include <array>
#include <optional>
#include <string_view>

namespace srl {

enum class OperatorFamily { Standard, Algebraic, Bounded, Drastic };

inline constexpr std::array<OperatorFamily, 4> kAllFamilies = {
    OperatorFamily::Standard, OperatorFamily::Algebraic,
    OperatorFamily::Bounded, OperatorFamily::Drastic};

inline constexpr std::array<OperatorFamily, 3> kContinuousFamilies = {
    OperatorFamily::Standard, OperatorFamily::Algebraic,
    OperatorFamily::Bounded};

// Operands may exceed [0,1] by at most this much before DomainError.
inline constexpr double kDomainTolerance = 1e-12;

// Checked operators: throw DomainError for operands outside [0,1].
double tnorm(OperatorFamily fam, double x, double y);
double tconorm(OperatorFamily fam, double x, double y);
double negate(OperatorFamily fam, double x);

bool is_continuous(OperatorFamily fam) noexcept;

// Lowercase CLI token: standard, algebraic, bounded, drastic.
std::string_view family_name(OperatorFamily fam) noexcept;
std::optional<OperatorFamily> family_from_name(std::string_view name) noexcept;

namespace raw {

// Unchecked forms used by the compiled evaluator. They extend the formulas
// to all reals so unclamped iterates can be followed outside the unit box.
inline double tnorm(OperatorFamily fam, double x, double y) noexcept {
  switch (fam) {
    case OperatorFamily::Standard: return x < y ? x : y;
    case OperatorFamily::Algebraic: return x * y;
    case OperatorFamily::Bounded: {
      // lo - (1 - hi) is exact at hi = 1 and symmetric in its arguments.
      const double lo = x < y ? x : y, hi = x < y ? y : x;
      const double s = lo - (1.0 - hi);
      return s > 0.0 ? s : 0.0;
    }
    case OperatorFamily::Drastic:
      if (y == 1.0) return x;
      if (x == 1.0) return y;
      return 0.0;
  }
  return 0.0;
}

inline double tconorm(OperatorFamily fam, double x, double y) noexcept {
  switch (fam) {
    case OperatorFamily::Standard: return x > y ? x : y;
    case OperatorFamily::Algebraic: return x + y - x * y;
    case OperatorFamily::Bounded: {
      const double s = x + y;
      return s < 1.0 ? s : 1.0;
    }
    case OperatorFamily::Drastic:
      if (y == 0.0) return x;
      if (x == 0.0) return y;
      return 1.0;
  }
  return 0.0;
}

inline double negate(OperatorFamily, double x) noexcept { return 1.0 - x; }

}  // namespace raw

}  // namespace srl
