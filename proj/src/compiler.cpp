#include "srl/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "srl/error.hpp"

namespace srl {

TruthVector::TruthVector(std::vector<double> values) : values_(std::move(values)) {
  for (auto& v : values_) {
    if (!(v >= -kDomainTolerance && v <= 1.0 + kDomainTolerance))
      throw DomainError("truth value " + std::to_string(v) + " outside [0,1]");
    v = std::clamp(v, 0.0, 1.0);
  }
}

TruthVector TruthVector::clamped(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  for (auto& v : out) {
    if (std::isnan(v)) throw DomainError("truth value is NaN");
    v = std::clamp(v, 0.0, 1.0);
  }
  return TruthVector(std::move(out));
}

TruthVector TruthVector::midpoint(std::size_t m) {
  return TruthVector(std::vector<double>(m, 0.5));
}

namespace {

void check_dimension(const CompiledSystem& sys, std::size_t n) {
  if (n != sys.dimension())
    throw InvalidArgument("vector of size " + std::to_string(n) +
                          " does not match system dimension " +
                          std::to_string(sys.dimension()));
}

}  // namespace

CompiledSystem::CompiledSystem(Collection collection, OperatorFamily family)
    : collection_(std::move(collection)), family_(family) {
  require_valid(collection_);

  // Postfix lowering; `depth` tracks the operand stack height.
  struct Lowering {
    std::vector<Instr>& out;
    std::size_t depth = 0;
    std::size_t max_depth = 0;

    void push(Instr i, int delta) {
      out.push_back(i);
      depth = static_cast<std::size_t>(static_cast<long>(depth) + delta);
      max_depth = std::max(max_depth, depth);
    }
    void l1(const Level1Formula& b) {
      switch (b.kind()) {
        case Level1Formula::Kind::Var:
          push({Op::Var, b.index().value - 1, 0.0}, +1);
          return;
        case Level1Formula::Kind::Not:
          l1(b.operand());
          push({Op::Not}, 0);
          return;
        case Level1Formula::Kind::And:
        case Level1Formula::Kind::Or:
          l1(b.lhs());
          l1(b.rhs());
          push({b.kind() == Level1Formula::Kind::And ? Op::And : Op::Or}, -1);
          return;
      }
    }
    void l2(const Level2Formula& d) {
      switch (d.kind()) {
        case Level2Formula::Kind::Leaf: {
          const auto& a = d.assessment();
          l1(a.target);
          push({a.relation == Relation::Equal ? Op::AssessEq : Op::AssessNe, 0,
                a.value},
               0);
          return;
        }
        case Level2Formula::Kind::Not:
          l2(d.operand());
          push({Op::Not}, 0);
          return;
        case Level2Formula::Kind::And:
        case Level2Formula::Kind::Or:
          l2(d.lhs());
          l2(d.rhs());
          push({d.kind() == Level2Formula::Kind::And ? Op::And : Op::Or}, -1);
          return;
      }
    }
  };

  programs_.reserve(collection_.size);
  for (const auto& d : collection_.definitions) {
    programs_.emplace_back();
    Lowering lower{programs_.back()};
    lower.l2(d);
    stack_depth_ = std::max(stack_depth_, lower.max_depth);
  }
}

template <bool TrackKinks>
double CompiledSystem::run(const std::vector<Instr>& program,
                           std::span<const double> x, double* stack,
                           double* margin) const {
  std::size_t sp = 0;
  for (const auto& in : program) {
    switch (in.op) {
      case Op::Var:
        stack[sp++] = x[in.index];
        break;
      case Op::Not:
        stack[sp - 1] = raw::negate(family_, stack[sp - 1]);
        break;
      case Op::AssessEq:
      case Op::AssessNe: {
        const double d = std::abs(stack[sp - 1] - in.value);
        if constexpr (TrackKinks) *margin = std::min(*margin, d);
        stack[sp - 1] = in.op == Op::AssessEq ? 1.0 - d : d;
        break;
      }
      case Op::And:
      case Op::Or: {
        const double a = stack[sp - 2];
        const double b = stack[sp - 1];
        if constexpr (TrackKinks) {
          switch (family_) {
            case OperatorFamily::Standard:
              *margin = std::min(*margin, std::abs(a - b));
              break;
            case OperatorFamily::Bounded:
              *margin = std::min(*margin, std::abs(a + b - 1.0));
              break;
            case OperatorFamily::Drastic:
              *margin = in.op == Op::And
                            ? std::min({*margin, std::abs(a - 1.0),
                                        std::abs(b - 1.0)})
                            : std::min({*margin, std::abs(a), std::abs(b)});
              break;
            case OperatorFamily::Algebraic:
              break;
          }
        }
        stack[sp - 2] = in.op == Op::And ? raw::tnorm(family_, a, b)
                                         : raw::tconorm(family_, a, b);
        --sp;
        break;
      }
    }
  }
  return stack[0];
}

void CompiledSystem::evaluate(std::span<const double> x,
                              std::span<double> out) const {
  check_dimension(*this, x.size());
  check_dimension(*this, out.size());
  constexpr std::size_t kInline = 64;
  double inline_stack[kInline];
  std::vector<double> heap;
  double* stack = inline_stack;
  if (stack_depth_ > kInline) {
    heap.resize(stack_depth_);
    stack = heap.data();
  }
  for (std::size_t m = 0; m < programs_.size(); ++m)
    out[m] = run<false>(programs_[m], x, stack, nullptr);
}

double CompiledSystem::inconsistency_at(std::span<const double> x) const {
  constexpr std::size_t kInline = 16;
  double inline_f[kInline];
  std::vector<double> heap;
  std::span<double> f;
  if (dimension() <= kInline) {
    f = std::span<double>(inline_f, dimension());
  } else {
    heap.resize(dimension());
    f = heap;
  }
  evaluate(x, f);
  double j = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double r = x[m] - f[m];
    j += r * r;
  }
  return j;
}

double CompiledSystem::kink_margin(std::span<const double> x, bool include_faces) const {
  check_dimension(*this, x.size());
  double margin = std::numeric_limits<double>::infinity();
  if (include_faces)
    for (double v : x) margin = std::min({margin, std::abs(v), std::abs(1.0 - v)});
  std::vector<double> stack(std::max<std::size_t>(stack_depth_, 1));
  for (const auto& program : programs_)
    run<true>(program, x, stack.data(), &margin);
  return margin;
}

double eval_level1(const Level1Formula& b, const TruthVector& x,
                   OperatorFamily fam) {
  switch (b.kind()) {
    case Level1Formula::Kind::Var: {
      const auto i = b.index().value;
      if (i < 1 || i > x.size())
        throw InvalidArgument("A" + std::to_string(i) +
                              " not covered by truth vector");
      return x[i - 1];
    }
    case Level1Formula::Kind::Not:
      return negate(fam, eval_level1(b.operand(), x, fam));
    case Level1Formula::Kind::And:
      return tnorm(fam, eval_level1(b.lhs(), x, fam),
                   eval_level1(b.rhs(), x, fam));
    case Level1Formula::Kind::Or:
      return tconorm(fam, eval_level1(b.lhs(), x, fam),
                     eval_level1(b.rhs(), x, fam));
  }
  return 0.0;
}

double eval_assessment(const Assessment& a, const TruthVector& x,
                       OperatorFamily fam) {
  const double d = std::abs(eval_level1(a.target, x, fam) - a.value);
  return a.relation == Relation::Equal ? 1.0 - d : d;
}

double eval_level2(const Level2Formula& d, const TruthVector& x,
                   OperatorFamily fam) {
  switch (d.kind()) {
    case Level2Formula::Kind::Leaf:
      return eval_assessment(d.assessment(), x, fam);
    case Level2Formula::Kind::Not:
      return negate(fam, eval_level2(d.operand(), x, fam));
    case Level2Formula::Kind::And:
      return tnorm(fam, eval_level2(d.lhs(), x, fam),
                   eval_level2(d.rhs(), x, fam));
    case Level2Formula::Kind::Or:
      return tconorm(fam, eval_level2(d.lhs(), x, fam),
                     eval_level2(d.rhs(), x, fam));
  }
  return 0.0;
}

TruthVector eval_f(const CompiledSystem& sys, const TruthVector& x) {
  std::vector<double> out(sys.dimension());
  sys.evaluate(x.values(), out);
  return TruthVector(std::move(out));
}

std::vector<double> residual(const CompiledSystem& sys, const TruthVector& x) {
  std::vector<double> out(sys.dimension());
  sys.evaluate(x.values(), out);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = x[m] - out[m];
  return out;
}

double inconsistency(const CompiledSystem& sys, const TruthVector& x) {
  check_dimension(sys, x.size());
  return sys.inconsistency_at(x.values());
}

namespace {

void check_step(double step) {
  if (!(step > 0.0 && step <= 1e-3))
    throw InvalidArgument("finite-difference step must lie in (0, 1e-3]");
}

// Perturbation bounds for coordinate value v.
std::pair<double, double> stencil(double v, double step, bool clamp_to_box) {
  if (!clamp_to_box) return {v - step, v + step};
  return {std::max(0.0, v - step), std::min(1.0, v + step)};
}

}  // namespace

Matrix jacobian_at(const CompiledSystem& sys, std::span<const double> x,
                   double step, bool clamp_to_box) {
  check_dimension(sys, x.size());
  check_step(step);
  const std::size_t n = sys.dimension();
  Matrix g(n, n);
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> f_lo(n), f_hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto [lo, hi] = stencil(x[j], step, clamp_to_box);
    probe[j] = lo;
    sys.evaluate(probe, f_lo);
    probe[j] = hi;
    sys.evaluate(probe, f_hi);
    probe[j] = x[j];
    const double width = hi - lo;
    for (std::size_t i = 0; i < n; ++i) {
      // h_i = x_i - f_i; the x_i term contributes the identity.
      const double dh_lo = (i == j ? lo : x[i]) - f_lo[i];
      const double dh_hi = (i == j ? hi : x[i]) - f_hi[i];
      g(i, j) = (dh_hi - dh_lo) / width;
    }
  }
  return g;
}

std::vector<double> gradient_at(const CompiledSystem& sys,
                                std::span<const double> x, double step,
                                bool clamp_to_box) {
  check_dimension(sys, x.size());
  check_step(step);
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(sys.dimension());
  for (std::size_t j = 0; j < grad.size(); ++j) {
    const auto [lo, hi] = stencil(x[j], step, clamp_to_box);
    probe[j] = lo;
    const double j_lo = sys.inconsistency_at(probe);
    probe[j] = hi;
    const double j_hi = sys.inconsistency_at(probe);
    probe[j] = x[j];
    grad[j] = (j_hi - j_lo) / (hi - lo);
  }
  return grad;
}

Matrix jacobian(const CompiledSystem& sys, const TruthVector& x, double step) {
  return jacobian_at(sys, x.values(), step, true);
}

std::vector<double> grad_inconsistency(const CompiledSystem& sys,
                                       const TruthVector& x, double step) {
  return gradient_at(sys, x.values(), step, true);
}

}  // namespace srl
