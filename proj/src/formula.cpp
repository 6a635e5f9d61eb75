#include "srl/formula.hpp"

#include <algorithm>
#include <sstream>

#include "srl/error.hpp"

namespace srl {

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
            ": " + message),
      kind_(kind),
      span_(span),
      detail_(message) {}

Level1Formula Level1Formula::var(std::size_t index) {
  Level1Formula f;
  f.kind_ = Kind::Var;
  f.index_ = SentenceIndex{index};
  return f;
}

Level1Formula Level1Formula::conj(Level1Formula lhs, Level1Formula rhs) {
  Level1Formula f;
  f.kind_ = Kind::And;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Level1Formula Level1Formula::disj(Level1Formula lhs, Level1Formula rhs) {
  Level1Formula f;
  f.kind_ = Kind::Or;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Level1Formula Level1Formula::negation(Level1Formula operand) {
  Level1Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(operand));
  return f;
}

Level2Formula Level2Formula::leaf(Assessment assessment) {
  Level2Formula f;
  f.kind_ = Kind::Leaf;
  f.assessment_ = std::move(assessment);
  return f;
}

Level2Formula Level2Formula::conj(Level2Formula lhs, Level2Formula rhs) {
  Level2Formula f;
  f.kind_ = Kind::And;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Level2Formula Level2Formula::disj(Level2Formula lhs, Level2Formula rhs) {
  Level2Formula f;
  f.kind_ = Kind::Or;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Level2Formula Level2Formula::negation(Level2Formula operand) {
  Level2Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(operand));
  return f;
}

Level2Formula tr_eq(Level1Formula target, double value) {
  return Level2Formula::leaf({std::move(target), Relation::Equal, value});
}

Level2Formula tr_ne(Level1Formula target, double value) {
  return Level2Formula::leaf({std::move(target), Relation::NotEqual, value});
}

namespace {

template <class Fn>
void for_each_assessment(const Level2Formula& d, Fn&& fn) {
  if (d.kind() == Level2Formula::Kind::Leaf) {
    fn(d.assessment());
    return;
  }
  for (const auto& child : d.children()) for_each_assessment(child, fn);
}

template <class Fn>
void for_each_var(const Level1Formula& b, Fn&& fn) {
  if (b.kind() == Level1Formula::Kind::Var) {
    fn(b.index());
    return;
  }
  for (const auto& child : b.children()) for_each_var(child, fn);
}

}  // namespace

std::set<SentenceIndex> free_variables(const Level1Formula& b) {
  std::set<SentenceIndex> out;
  for_each_var(b, [&](SentenceIndex i) { out.insert(i); });
  return out;
}

std::set<SentenceIndex> free_variables(const Level2Formula& d) {
  std::set<SentenceIndex> out;
  for_each_assessment(d, [&](const Assessment& a) {
    for_each_var(a.target, [&](SentenceIndex i) { out.insert(i); });
  });
  return out;
}

bool is_boolean_collection(const Collection& c) {
  bool boolean = true;
  for (const auto& d : c.definitions) {
    for_each_assessment(d, [&](const Assessment& a) {
      if (a.relation != Relation::Equal || (a.value != 0.0 && a.value != 1.0))
        boolean = false;
    });
  }
  return boolean;
}

std::vector<Violation> validate(const Collection& c) {
  std::vector<Violation> out;
  if (c.size < 1) out.push_back({0, "collection size M must be at least 1"});
  if (c.definitions.size() != c.size) {
    std::ostringstream msg;
    msg << "expected " << c.size << " definitions, found "
        << c.definitions.size();
    out.push_back({0, msg.str()});
  }
  for (std::size_t m = 0; m < c.definitions.size(); ++m) {
    const std::size_t def = m + 1;
    for_each_assessment(c.definitions[m], [&](const Assessment& a) {
      // Written to also reject NaN.
      if (!(a.value >= 0.0 && a.value <= 1.0)) {
        std::ostringstream msg;
        msg << "assessment value " << a.value << " outside [0,1]";
        out.push_back({def, msg.str()});
      }
      for_each_var(a.target, [&](SentenceIndex i) {
        if (i.value < 1 || i.value > c.size) {
          std::ostringstream msg;
          msg << "sentence index A" << i.value << " out of range 1.."
              << c.size;
          out.push_back({def, msg.str()});
        }
      });
    });
  }
  return out;
}

void require_valid(const Collection& c) {
  auto violations = validate(c);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid collection:";
  for (const auto& v : violations) {
    msg << " [";
    if (v.definition != 0) msg << "definition " << v.definition << ": ";
    msg << v.message << "]";
  }
  throw InvalidCollection(msg.str());
}

namespace {

std::size_t count_vars(const Level1Formula& b) {
  std::size_t n = 0;
  for_each_var(b, [&](SentenceIndex) { ++n; });
  return n;
}

}  // namespace

std::size_t leaf_count(const Level2Formula& d) {
  std::size_t n = 0;
  for_each_assessment(d, [&](const Assessment& a) { n += count_vars(a.target); });
  return n;
}

std::size_t sensitivity(const Collection& c) {
  std::size_t out = 1;
  for (const auto& d : c.definitions) out = std::max(out, leaf_count(d));
  return out;
}

}  // namespace srl
