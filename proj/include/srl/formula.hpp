#pragma once

// Abstract syntax for self-referential collections.
//
// A collection of M sentences A1..AM is described by one second-level
// formula per sentence. Second-level formulas combine truth assessments
// ("Tr(B) = b" or "Tr(B) != b") with and/or/not; the B inside an assessment
// is a first-level formula over the sentence variables.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace srl {

// 1-based sentence index.
struct SentenceIndex {
  std::size_t value = 1;

  friend bool operator==(SentenceIndex, SentenceIndex) = default;
  friend auto operator<=>(SentenceIndex, SentenceIndex) = default;
};

enum class Connective { And, Or, Not };

class Level1Formula {
 public:
  enum class Kind { Var, And, Or, Not };

  static Level1Formula var(std::size_t index);
  static Level1Formula conj(Level1Formula lhs, Level1Formula rhs);
  static Level1Formula disj(Level1Formula lhs, Level1Formula rhs);
  static Level1Formula negation(Level1Formula operand);

  Kind kind() const noexcept { return kind_; }
  // Only meaningful for Kind::Var.
  SentenceIndex index() const noexcept { return index_; }
  const std::vector<Level1Formula>& children() const noexcept {
    return children_;
  }
  const Level1Formula& lhs() const { return children_.at(0); }
  const Level1Formula& rhs() const { return children_.at(1); }
  const Level1Formula& operand() const { return children_.at(0); }

  friend bool operator==(const Level1Formula&, const Level1Formula&) = default;

 private:
  Level1Formula() = default;

  Kind kind_ = Kind::Var;
  SentenceIndex index_{};
  std::vector<Level1Formula> children_;
};

enum class Relation { Equal, NotEqual };

struct Assessment {
  Level1Formula target;
  Relation relation = Relation::Equal;
  double value = 0.0;

  friend bool operator==(const Assessment&, const Assessment&) = default;
};

class Level2Formula {
 public:
  enum class Kind { Leaf, And, Or, Not };

  static Level2Formula leaf(Assessment assessment);
  static Level2Formula conj(Level2Formula lhs, Level2Formula rhs);
  static Level2Formula disj(Level2Formula lhs, Level2Formula rhs);
  static Level2Formula negation(Level2Formula operand);

  Kind kind() const noexcept { return kind_; }
  // Only meaningful for Kind::Leaf.
  const Assessment& assessment() const { return assessment_.value(); }
  const std::vector<Level2Formula>& children() const noexcept {
    return children_;
  }
  const Level2Formula& lhs() const { return children_.at(0); }
  const Level2Formula& rhs() const { return children_.at(1); }
  const Level2Formula& operand() const { return children_.at(0); }

  friend bool operator==(const Level2Formula&, const Level2Formula&) = default;

 private:
  Level2Formula() = default;

  Kind kind_ = Kind::Leaf;
  std::optional<Assessment> assessment_;
  std::vector<Level2Formula> children_;
};

// Shorthand for building assessments in code.
Level2Formula tr_eq(Level1Formula target, double value);
Level2Formula tr_ne(Level1Formula target, double value);

struct Violation {
  std::size_t definition = 0;  // 1-based; 0 for collection-level problems
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// definitions[m] is D_{m+1}: sentence A_{m+1} says D_{m+1}.
struct Collection {
  std::size_t size = 0;
  std::vector<Level2Formula> definitions;

  friend bool operator==(const Collection&, const Collection&) = default;
};

std::set<SentenceIndex> free_variables(const Level2Formula& d);
std::set<SentenceIndex> free_variables(const Level1Formula& b);

bool is_boolean_collection(const Collection& c);

// Empty when every invariant holds.
std::vector<Violation> validate(const Collection& c);

// Throws InvalidCollection listing the violations.
void require_valid(const Collection& c);

// Number of Var leaves reachable from d (counting repeats). Bounds the
// sup-norm Lipschitz constant of the compiled right-hand side under the
// continuous families.
std::size_t leaf_count(const Level2Formula& d);

// max over definitions of leaf_count, at least 1.
std::size_t sensitivity(const Collection& c);

}  // namespace srl
