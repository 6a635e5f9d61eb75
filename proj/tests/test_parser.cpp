#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "random_collection.hpp"
#include "srl/corpus.hpp"
#include "srl/error.hpp"
#include "srl/parser.hpp"

using namespace srl;

namespace {

using L1 = Level1Formula;
using L2 = Level2Formula;

ParseError parse_failure(std::string_view text) {
  try {
    parse_collection(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError(ParseError::Kind::Syntax, {}, "none");
}

TEST(Parser, Liar) {
  const auto c = parse_collection("M=1\nA1 := Tr(A1) = 0\n");
  ASSERT_EQ(c.size, 1u);
  EXPECT_EQ(c.definitions[0], tr_eq(L1::var(1), 0));
}

TEST(Parser, CommentsBlankLinesAndWhitespace) {
  const auto c = parse_collection(
      "# header comment\n\n  M = 2  # size\r\n"
      "A2 := Tr(A1)!=1\n\t A1:=Tr( A2 )= 0.5 # late\n");
  ASSERT_EQ(c.size, 2u);
  EXPECT_EQ(c.definitions[0], tr_eq(L1::var(2), 0.5));
  EXPECT_EQ(c.definitions[1], tr_ne(L1::var(1), 1));
}

TEST(Parser, PrecedenceAndAssociativity) {
  const auto c = parse_collection(
      "M=3\n"
      "A1 := Tr(A1) = 1 | Tr(A2) = 1 & !Tr(A3) = 0\n"
      "A2 := Tr(A1 & A2 & A3) = 1\n"
      "A3 := Tr(!A1 | A2) = 0 & (Tr(A1) = 1 | Tr(A2) = 1)\n");
  const auto a = [](std::size_t i) { return L1::var(i); };
  EXPECT_EQ(c.definitions[0],
            L2::disj(tr_eq(a(1), 1), L2::conj(tr_eq(a(2), 1), L2::negation(tr_eq(a(3), 0)))));
  EXPECT_EQ(c.definitions[1], tr_eq(L1::conj(L1::conj(a(1), a(2)), a(3)), 1));
  EXPECT_EQ(c.definitions[2],
            L2::conj(tr_eq(L1::disj(L1::negation(a(1)), a(2)), 0),
                     L2::disj(tr_eq(a(1), 1), tr_eq(a(2), 1))));
}

TEST(Parser, ExactBooleanLiterals) {
  const auto c = parse_collection("M=1\nA1 := Tr(A1) = 1.0 & Tr(A1) = 0.000\n");
  EXPECT_TRUE(is_boolean_collection(c));
}

struct ErrorCase {
  const char* text;
  ParseError::Kind kind;
  std::size_t line;
  std::size_t column;
};

TEST(Parser, ErrorsCarryPositions) {
  const ErrorCase cases[] = {
      {"M=1\nA1 := Tr(A2) = 0\n", ParseError::Kind::Semantic, 2, 10},
      {"M=1\nA1 := Tr(A1) = 1.5\n", ParseError::Kind::Semantic, 2, 16},
      {"M=1\nA1 := Tr(A1) = 0\nA1 := Tr(A1) = 1\n", ParseError::Kind::Semantic, 3, 1},
      {"M=2\nA1 := Tr(A1) = 0\n", ParseError::Kind::Semantic, 3, 1},
      {"M=0\n", ParseError::Kind::Semantic, 1, 3},
      {"M=1.5\n", ParseError::Kind::Syntax, 1, 3},
      {"A1 := Tr(A1) = 0\n", ParseError::Kind::Syntax, 1, 1},
      {"", ParseError::Kind::Syntax, 1, 1},
      {"M=1\nA1 := Tr(A1) = 1e-3\n", ParseError::Kind::Lexical, 2, 16},
      {"M=1\nA1 := Tr(A1) = .5\n", ParseError::Kind::Lexical, 2, 16},
      {"M=1\nA1 := Tr(A1) = 1.\n", ParseError::Kind::Lexical, 2, 16},
      {"M=1\nA1 := Tr(A1) ! = 1\n", ParseError::Kind::Syntax, 2, 14},
      {"M=1\nA1 := Tr(A1) == 1\n", ParseError::Kind::Syntax, 2, 15},
      {"M=1\nA1 := Tr(A0) = 1\n", ParseError::Kind::Lexical, 2, 10},
      {"M=1\nA1 := Tr(B1) = 1\n", ParseError::Kind::Lexical, 2, 10},
      {"M=1\nA1 := Tr(A1 = 1\n", ParseError::Kind::Syntax, 2, 13},
      {"M=1\nA1 : Tr(A1) = 1\n", ParseError::Kind::Lexical, 2, 4},
      {"M=1\nA1 := (Tr(A1) = 1\n", ParseError::Kind::Syntax, 2, 18},
      {"M=1\nA1 := Tr(A1) = 1 extra\n", ParseError::Kind::Lexical, 2, 18},
      {"M=1\nA1 := Tr(A1) = 1 Tr(A1) = 0\n", ParseError::Kind::Syntax, 2, 18},
      {"M=1\nA1 := A1\n", ParseError::Kind::Syntax, 2, 7},
      {"M=1\nA1 := Tr(A1) = 1 $\n", ParseError::Kind::Lexical, 2, 18},
      {"M=1\nM=1\n", ParseError::Kind::Syntax, 2, 1},
  };
  for (const auto& tc : cases) {
    const ParseError e = parse_failure(tc.text);
    EXPECT_EQ(e.kind(), tc.kind) << tc.text << " -> " << e.what();
    EXPECT_EQ(e.span().line, tc.line) << tc.text << " -> " << e.what();
    EXPECT_EQ(e.span().column, tc.column) << tc.text << " -> " << e.what();
    EXPECT_EQ(std::string(e.what()),
              std::to_string(tc.line) + ":" + std::to_string(tc.column) + ": " + e.detail());
  }
}

TEST(Parser, FormatIsCanonical) {
  const auto c = parse_collection(
      "M=3\n"
      "A1 := (Tr(A2) = 0.9 & Tr(A3) = 0.2)\n"
      "A2 := Tr(A1) = 1 & (Tr(A3) = 0.3 | !(Tr(A1 | A2) != 0))\n"
      "A3 := Tr(A1 & (A2 | A3)) = 0.1\n");
  EXPECT_EQ(format_collection(c),
            "M=3\n"
            "A1 := Tr(A2) = 0.9 & Tr(A3) = 0.2\n"
            "A2 := Tr(A1) = 1 & (Tr(A3) = 0.3 | !Tr(A1 | A2) != 0)\n"
            "A3 := Tr(A1 & (A2 | A3)) = 0.1\n");
}

TEST(Parser, RightNestedOperandsKeepParentheses) {
  const auto c = parse_collection("M=3\nA1 := Tr(A1 & (A2 & A3)) = 1\nA2 := Tr(A1) = 0 | (Tr(A2) = 0 | Tr(A3) = 0)\nA3 := Tr(A3) = 1\n");
  const auto text = format_collection(c);
  EXPECT_NE(text.find("Tr(A1 & (A2 & A3))"), std::string::npos);
  EXPECT_NE(text.find("Tr(A1) = 0 | (Tr(A2) = 0 | Tr(A3) = 0)"), std::string::npos);
  EXPECT_EQ(parse_collection(text), c);
}

TEST(Parser, FormatValueIsShortestFixed) {
  EXPECT_EQ(format_value(0), "0");
  EXPECT_EQ(format_value(1), "1");
  EXPECT_EQ(format_value(0.35), "0.35");
  EXPECT_EQ(format_value(0.1 + 0.2), "0.30000000000000004");
  EXPECT_EQ(format_value(1e-7), "0.0000001");
}

TEST(Parser, RoundTripOnRandomCollections) {
  support::CollectionGenerator gen(99);
  for (int i = 0; i < 300; ++i) {
    auto c = gen.collection({.max_size = 6, .max_depth = 5});
    if (i % 5 == 0)  // arbitrary binary64 values also round-trip
      c.definitions[0] = tr_eq(L1::var(1), gen.uniform(0.0, 1.0));
    const auto text = format_collection(c);
    const auto back = parse_collection(text);
    ASSERT_EQ(back, c) << text;
    EXPECT_EQ(format_collection(back), text);
  }
}

TEST(Parser, Deterministic) {
  const std::string text = builtin("example6").source_text;
  EXPECT_EQ(parse_collection(text), parse_collection(text));
}

TEST(Parser, CorpusTextMatchesConstructedCollections) {
  for (const auto& name : corpus_names()) {
    const auto& e = builtin(name);
    EXPECT_EQ(parse_collection(e.source_text), e.collection) << name;
  }
}

TEST(Parser, BundledCorpusFilesMatch) {
  for (const auto& name : corpus_names()) {
    std::ifstream in(std::string(SRL_CORPUS_DATA_DIR) + "/" + name + ".srl", std::ios::binary);
    ASSERT_TRUE(in) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), builtin(name).source_text) << name;
    EXPECT_EQ(parse_collection(ss.str()), builtin(name).collection) << name;
  }
}

}  // namespace
