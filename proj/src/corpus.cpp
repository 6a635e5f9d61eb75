#include "srl/corpus.hpp"

#include <algorithm>

#include "srl/error.hpp"

namespace srl {

namespace {

using L1 = Level1Formula;
using L2 = Level2Formula;

L1 a(std::size_t i) { return L1::var(i); }

TruthVector point(std::vector<double> v) { return TruthVector(std::move(v)); }

KnownSolution fixed(std::optional<OperatorFamily> fam, std::vector<double> x,
                    std::string description, Provenance prov) {
  KnownSolution s;
  s.family = fam;
  s.point = point(std::move(x));
  s.description = std::move(description);
  s.provenance = prov;
  return s;
}

KnownSolution family(std::optional<OperatorFamily> fam,
                     std::function<TruthVector(double)> member,
                     std::string description) {
  KnownSolution s;
  s.family = fam;
  s.member = std::move(member);
  s.description = std::move(description);
  s.provenance = Provenance::Analytic;
  return s;
}

Collection make(std::vector<L2> defs) {
  Collection c;
  c.size = defs.size();
  c.definitions = std::move(defs);
  return c;
}

std::vector<CorpusEntry> build() {
  constexpr auto kStd = OperatorFamily::Standard;
  constexpr auto kAlg = OperatorFamily::Algebraic;
  std::vector<CorpusEntry> out;

  out.push_back({
      "liar",
      "A1: \"A1 is false\"",
      make({tr_eq(a(1), 0)}),
      "# The Liar: A1 says \"A1 is false\".\n"
      "M=1\n"
      "A1 := Tr(A1) = 0\n",
      {fixed(std::nullopt, {0.5}, "(1/2)", Provenance::Analytic)},
  });

  out.push_back({
      "inconsistent_dualist",
      "A1: \"A2 is true\"; A2: \"A1 is false\"",
      make({tr_eq(a(2), 1), tr_eq(a(1), 0)}),
      "# Inconsistent dualist.\n"
      "M=2\n"
      "A1 := Tr(A2) = 1   # A2 is true\n"
      "A2 := Tr(A1) = 0   # A1 is false\n",
      {fixed(std::nullopt, {0.5, 0.5}, "(1/2,1/2)", Provenance::Analytic)},
  });

  out.push_back({
      "consistent_dualist",
      "A1: \"A2 is true\"; A2: \"A1 is true\"",
      make({tr_eq(a(2), 1), tr_eq(a(1), 1)}),
      "# Consistent dualist.\n"
      "M=2\n"
      "A1 := Tr(A2) = 1   # A2 is true\n"
      "A2 := Tr(A1) = 1   # A1 is true\n",
      {family(std::nullopt, [](double b) { return point({b, b}); },
              "(b,b), b in [0,1]")},
  });

  out.push_back({
      "example4",
      "A1: \"A2 is true and A3 is false\"; A2: \"A1 is true and A3 is false\"; "
      "A3: \"A1 is false\"",
      make({L2::conj(tr_eq(a(2), 1), tr_eq(a(3), 0)),
            L2::conj(tr_eq(a(1), 1), tr_eq(a(3), 0)), tr_eq(a(1), 0)}),
      "# A1: \"A2 is true and A3 is false\"\n"
      "# A2: \"A1 is true and A3 is false\"\n"
      "# A3: \"A1 is false\"\n"
      "M=3\n"
      "A1 := Tr(A2) = 1 & Tr(A3) = 0\n"
      "A2 := Tr(A1) = 1 & Tr(A3) = 0\n"
      "A3 := Tr(A1) = 0\n",
      {family(kStd, [](double b) { return point({b, b, 1.0 - b}); },
              "(b,b,1-b), b in [0,1]"),
       fixed(kAlg, {0, 0, 1}, "(0,0,1)", Provenance::Analytic),
       fixed(kAlg, {1, 1, 0}, "(1,1,0)", Provenance::Analytic)},
  });

  out.push_back({
      "example5",
      "A1: \"Tr(A2) is 0.90 and Tr(A3) is 0.20\"; A2: \"Tr(A1) is 0.80 and "
      "Tr(A3) is 0.30\"; A3: \"Tr(A1) is 0.10\"",
      make({L2::conj(tr_eq(a(2), 0.9), tr_eq(a(3), 0.2)),
            L2::conj(tr_eq(a(1), 0.8), tr_eq(a(3), 0.3)), tr_eq(a(1), 0.1)}),
      "# A1: \"The truth value of A2 is 0.90 and the truth value of A3 is 0.20\"\n"
      "# A2: \"The truth value of A1 is 0.80 and the truth value of A3 is 0.30\"\n"
      "# A3: \"The truth value of A1 is 0.10\"\n"
      "M=3\n"
      "A1 := Tr(A2) = 0.9 & Tr(A3) = 0.2\n"
      "A2 := Tr(A1) = 0.8 & Tr(A3) = 0.3\n"
      "A3 := Tr(A1) = 0.1\n",
      {fixed(kStd, {0.95, 0.85, 0.15}, "(0.95,0.85,0.15)",
             Provenance::Rounded),
       fixed(kAlg, {0.6784, 0.7715, 0.4216}, "(0.6784,0.7715,0.4216)",
             Provenance::Rounded),
       fixed(kAlg, {0.0473, 0.0872, 0.9473}, "(0.0473,0.0872,0.9473)",
             Provenance::Rounded)},
  });

  out.push_back({
      "example6",
      "A1: (Tr(A1) is 0.75 and Tr(A2) is 0.35) or Tr(A4) is 1; A2: Tr(A1 or "
      "A3) is 1 and Tr(A4) is 0.10; A3: Tr(A2) is 0 and Tr(A3) is 0.35; A4: "
      "Tr(not A1) is 0.25",
      make({L2::disj(L2::conj(tr_eq(a(1), 0.75), tr_eq(a(2), 0.35)),
                     tr_eq(a(4), 1)),
            L2::conj(tr_eq(L1::disj(a(1), a(3)), 1), tr_eq(a(4), 0.1)),
            L2::conj(tr_eq(a(2), 0), tr_eq(a(3), 0.35)),
            tr_eq(L1::negation(a(1)), 0.25)}),
      "# A1: (\"A1 has truth value 0.75\" and \"A2 has truth value 0.35\")\n"
      "#     or \"A4 has truth value 1.00\"\n"
      "# A2: (\"A1 or A3 has truth value 1.00\") and \"A4 has truth value 0.10\"\n"
      "# A3: \"A2 has truth value 0.00\" and \"A3 has truth value 0.35\"\n"
      "# A4: \"The opposite of A1 has truth value 0.25\"\n"
      "M=4\n"
      "A1 := Tr(A1) = 0.75 & Tr(A2) = 0.35 | Tr(A4) = 1\n"
      "A2 := Tr(A1 | A3) = 1 & Tr(A4) = 0.1\n"
      "A3 := Tr(A2) = 0 & Tr(A3) = 0.35\n"
      "A4 := Tr(!A1) = 0.25\n",
      {fixed(kStd, {0.875, 0.225, 0.675, 0.875}, "(0.875,0.225,0.675,0.875)",
             Provenance::Rounded),
       fixed(kAlg, {0.9507, 0.2942, 0.5586, 0.7993},
             "(0.9507,0.2942,0.5586,0.7993)", Provenance::Rounded)},
  });

  out.push_back({
      "strengthened_liar",
      "A1: \"A1 is not true\"",
      make({tr_ne(a(1), 1)}),
      "# Strengthened Liar: A1 says \"A1 is not true\".\n"
      "M=1\n"
      "A1 := Tr(A1) != 1\n",
      {fixed(std::nullopt, {0.5}, "(1/2)", Provenance::Analytic)},
  });

  return out;
}

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> kEntries = build();
  return kEntries;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

std::vector<CorpusListing> list_corpus() {
  std::vector<CorpusListing> out;
  for (const auto& e : entries()) out.push_back({e.name, e.description});
  return out;
}

const CorpusEntry& builtin(std::string_view name) {
  const auto& all = entries();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const CorpusEntry& e) { return e.name == name; });
  if (it != all.end()) return *it;
  std::string msg = "unknown corpus entry '" + std::string(name) + "'; valid names:";
  for (const auto& e : all) msg += " " + e.name;
  throw UnknownName(msg);
}

}  // namespace srl
