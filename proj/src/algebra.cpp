#include "srl/algebra.hpp"

#include <string>

#include "srl/error.hpp"

namespace srl {

namespace {

void check_operand(double v, const char* op) {
  if (!(v >= -kDomainTolerance && v <= 1.0 + kDomainTolerance))
    throw DomainError(std::string(op) + ": operand " + std::to_string(v) +
                      " outside [0,1]");
}

}  // namespace

double tnorm(OperatorFamily fam, double x, double y) {
  check_operand(x, "tnorm");
  check_operand(y, "tnorm");
  return raw::tnorm(fam, x, y);
}

double tconorm(OperatorFamily fam, double x, double y) {
  check_operand(x, "tconorm");
  check_operand(y, "tconorm");
  return raw::tconorm(fam, x, y);
}

double negate(OperatorFamily fam, double x) {
  check_operand(x, "negate");
  return raw::negate(fam, x);
}

bool is_continuous(OperatorFamily fam) noexcept {
  return fam != OperatorFamily::Drastic;
}

std::string_view family_name(OperatorFamily fam) noexcept {
  switch (fam) {
    case OperatorFamily::Standard: return "standard";
    case OperatorFamily::Algebraic: return "algebraic";
    case OperatorFamily::Bounded: return "bounded";
    case OperatorFamily::Drastic: return "drastic";
  }
  return "unknown";
}

std::optional<OperatorFamily> family_from_name(std::string_view name) noexcept {
  for (auto fam : kAllFamilies)
    if (family_name(fam) == name) return fam;
  return std::nullopt;
}

}  // namespace srl
