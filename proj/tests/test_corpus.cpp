#include <gtest/gtest.h>

#include "srl/corpus.hpp"
#include "srl/error.hpp"
#include "srl/oracle.hpp"
#include "srl/solvers.hpp"

using namespace srl;

namespace {

TEST(Corpus, NamesAndOrder) {
  const std::vector<std::string> expected{"liar",     "inconsistent_dualist",
                                          "consistent_dualist", "example4",
                                          "example5", "example6",
                                          "strengthened_liar"};
  EXPECT_EQ(corpus_names(), expected);
  EXPECT_EQ(list_corpus().size(), expected.size());
}

TEST(Corpus, UnknownNameListsAlternatives) {
  try {
    builtin("truth_teller");
    FAIL();
  } catch (const UnknownName& e) {
    const std::string msg = e.what();
    for (const auto& n : corpus_names()) EXPECT_NE(msg.find(n), std::string::npos);
  }
}

TEST(Corpus, EntriesAreValid) {
  for (const auto& n : corpus_names()) EXPECT_TRUE(validate(builtin(n).collection).empty()) << n;
}

TEST(Corpus, KnownSolutionsVerify) {
  for (const auto& n : corpus_names()) {
    const auto& e = builtin(n);
    for (const auto& s : e.known_solutions) {
      for (auto fam : kContinuousFamilies) {
        if (!s.applies_to(fam)) continue;
        const CompiledSystem sys(e.collection, fam);
        if (s.member) {
          for (int i = 0; i <= 20; ++i)
            EXPECT_LE(inconsistency(sys, s.member(i / 20.0)), 1e-18) << n << " " << s.description;
        } else if (s.provenance == Provenance::Analytic) {
          EXPECT_LE(inconsistency(sys, *s.point), 1e-18) << n << " " << s.description;
        } else {
          const auto polished = polish(sys, *s.point, 1000);
          EXPECT_LE(inconsistency(sys, polished), 1e-5) << n << " " << s.description;
          // Only rounding separates the printed value from a root.
          EXPECT_LE(inconsistency(sys, *s.point), 1e-6) << n << " " << s.description;
        }
      }
    }
  }
}

TEST(Corpus, BooleanEntriesSolveAtTheMidpoint) {
  for (const auto& n : corpus_names()) {
    const auto r = check_midpoint(builtin(n).collection);
    if (r.applicable) {
      EXPECT_TRUE(r.holds) << n;
    }
  }
  EXPECT_TRUE(check_midpoint(builtin("example4").collection).applicable);
}

}  // namespace
