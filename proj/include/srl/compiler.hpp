#pragma once

// Lowering of a Collection under an OperatorFamily to the truth value
// equations x = f(x) on [0,1]^M, together with the residual h(x) = x - f(x),
// the inconsistency J(x) = |h(x)|^2 and finite-difference derivatives.

#include <cstddef>
#include <span>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/formula.hpp"

namespace srl {

inline constexpr double kDefaultFdStep = 1e-6;

// A point of [0,1]^M; x[m] is the truth value of A_{m+1}.
class TruthVector {
 public:
  TruthVector() = default;
  // Entries within kDomainTolerance of the box are snapped onto it; anything
  // further out (or NaN) throws DomainError.
  explicit TruthVector(std::vector<double> values);

  static TruthVector clamped(std::span<const double> values);
  static TruthVector midpoint(std::size_t m);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vec() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const TruthVector&, const TruthVector&) = default;

 private:
  std::vector<double> values_;
};

// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

// The right-hand sides f_1..f_M compiled into postfix programs. Immutable;
// evaluation is pure and may run concurrently.
class CompiledSystem {
 public:
  // Throws InvalidCollection if validate(collection) is not empty.
  CompiledSystem(Collection collection, OperatorFamily family);

  const Collection& collection() const noexcept { return collection_; }
  OperatorFamily family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return collection_.size; }

  // Unchecked evaluation of f on any real vector; the operator formulas are
  // continued outside [0,1]. Sizes must equal dimension().
  void evaluate(std::span<const double> x, std::span<double> out) const;
  double inconsistency_at(std::span<const double> x) const;

  // Distance from x to the nearest point where f stops being smooth: an
  // assessment argument at its asserted value, a min/max tie, the bounded
  // family's x+y=1 seam, or a face of the unit box.
  // Pass include_faces = false to ignore the box faces.
  double kink_margin(std::span<const double> x, bool include_faces = true) const;

 private:
  enum class Op { Var, And, Or, Not, AssessEq, AssessNe };
  struct Instr {
    Op op;
    std::size_t index = 0;  // 0-based, Op::Var
    double value = 0.0;     // Op::Assess*
  };

  template <bool TrackKinks>
  double run(const std::vector<Instr>& program, std::span<const double> x,
             double* stack, double* margin) const;

  Collection collection_;
  OperatorFamily family_;
  std::vector<std::vector<Instr>> programs_;
  std::size_t stack_depth_ = 0;
};

// Tree-walking evaluation of single formulas, independent of the compiled
// programs.
double eval_level1(const Level1Formula& b, const TruthVector& x,
                   OperatorFamily fam);
double eval_assessment(const Assessment& a, const TruthVector& x,
                       OperatorFamily fam);
double eval_level2(const Level2Formula& d, const TruthVector& x,
                   OperatorFamily fam);

TruthVector eval_f(const CompiledSystem& sys, const TruthVector& x);
std::vector<double> residual(const CompiledSystem& sys, const TruthVector& x);
double inconsistency(const CompiledSystem& sys, const TruthVector& x);

// G[i][j] ~ dh_i/dx_j by central differences; perturbed points are clamped
// into [0,1] so the difference becomes one-sided at the faces.
// Requires 0 < step <= 1e-3.
Matrix jacobian(const CompiledSystem& sys, const TruthVector& x,
                double step = kDefaultFdStep);
std::vector<double> grad_inconsistency(const CompiledSystem& sys,
                                       const TruthVector& x,
                                       double step = kDefaultFdStep);

// Span forms used by the solvers. With clamp_to_box false the differences
// are plain central differences of the continued formulas.
Matrix jacobian_at(const CompiledSystem& sys, std::span<const double> x,
                   double step, bool clamp_to_box);
std::vector<double> gradient_at(const CompiledSystem& sys,
                                std::span<const double> x, double step,
                                bool clamp_to_box);

}  // namespace srl
