#pragma once

// Built-in collections: the Liar, both dualists, three compound examples
// and the strengthened Liar.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/compiler.hpp"
#include "srl/formula.hpp"

namespace srl {

enum class Provenance {
  Analytic,      // exact solution of the equations
  Rounded,       // four-digit numerical value
};

struct KnownSolution {
  std::optional<OperatorFamily> family;  // nullopt: every family
  // Either a single point or a one-parameter family point(beta), beta in
  // [0,1].
  std::optional<TruthVector> point;
  std::function<TruthVector(double)> member;
  std::string description;
  Provenance provenance = Provenance::Analytic;

  bool applies_to(OperatorFamily fam) const { return !family || *family == fam; }
};

struct CorpusEntry {
  std::string name;
  std::string description;
  Collection collection;
  std::string source_text;
  std::vector<KnownSolution> known_solutions;
};

// Names in listing order.
std::vector<std::string> corpus_names();

struct CorpusListing {
  std::string name;
  std::string description;
};
std::vector<CorpusListing> list_corpus();

// Throws UnknownName listing the valid names.
const CorpusEntry& builtin(std::string_view name);

}  // namespace srl
