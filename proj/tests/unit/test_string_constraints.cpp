#include <gtest/gtest.h>

#include "cqs/evaluator.hpp"
#include "cqs/string_constraints.hpp"
#include "fixtures.hpp"

using namespace cqs;

TEST(StringConstraints, WitnessesForParameterType) {
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto g = fixture::fig1_query(s);
  int type_name = s.relation("Type").attr_index("name");
  int node = -1;
  for (size_t i = 0; i < g.strs.size(); ++i)
    if (g.strs[i].literal == "Log4jUtils") {
      node = g.strs[i].node;
      g.strs.erase(g.strs.begin() + i);
      break;
    }
  ASSERT_GE(node, 0);
  auto w = collect_witnesses(g, node, type_name, t.part, t.db);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], (std::set<std::string>{"Log4jUtils"}));
}

TEST(StringConstraints, WitnessesPerPositive) {
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto part = make_partition("Method", {"M1", "M2"}, t.db);
  auto g = parse_datalog("out(X1, I, X3, X4) :- Method(X1, I, X3, X4), Identifier(I, N).", s);
  auto w = collect_witnesses(g, 1, 1, part, t.db);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], (std::set<std::string>{"foo"}));
  EXPECT_EQ(w[1], (std::set<std::string>{"f2"}));
}

TEST(StringConstraints, SynLcsExamples) {
  auto c = syn_lcs({{"CacheConfig"}, {"CacheConfig"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pred, StrPred::Equal);
  EXPECT_EQ(c->literal, "CacheConfig");
  c = syn_lcs({{"cashFlow"}, {"cashBook"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pred, StrPred::Prefix);
  EXPECT_EQ(c->literal, "cash");
  EXPECT_FALSE(syn_lcs({{"abc"}, {"xyz"}}));
  EXPECT_FALSE(syn_lcs({{"abc"}, {}}));
  EXPECT_FALSE(syn_lcs({}));
  c = syn_lcs({{"getX"}, {"setX"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pred, StrPred::Suffix);
  EXPECT_EQ(c->literal, "etX");
  c = syn_lcs({{"xaby"}, {"zabw"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pred, StrPred::Contain);
  EXPECT_EQ(c->literal, "ab");
}

TEST(StringConstraints, WitnessSetsWithSeveralValues) {
  // Any member of each set may carry the literal.
  auto c = syn_lcs({{"zzz", "Logger"}, {"LogManager", "q"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->literal, "Log");
  EXPECT_EQ(c->pred, StrPred::Prefix);
}

TEST(StringConstraints, CodePoints) {
  EXPECT_EQ(utf8_decode("é中a").size(), 3u);
  EXPECT_EQ(utf8_encode(utf8_decode("é中a")), "é中a");
  auto c = syn_lcs({{"aé中"}, {"é中b"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->literal, "é中");
  // ties break towards the smallest code point sequence
  c = syn_lcs({{"ab", "ba"}, {"ba", "ab"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->literal, "ab");
  EXPECT_EQ(c->pred, StrPred::Equal);
}

TEST(StringConstraints, LcsOfGroups) {
  std::vector<std::vector<std::u32string>> g = {{U"xabcx"}, {U"yabcy", U"q"}, {U"abc"}};
  EXPECT_EQ(longest_common_substring(g), U"abc");
  EXPECT_EQ(longest_common_substring({{U"a"}, {U"b"}}), U"");
}

TEST(StringConstraints, MatchesBruteForce) {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    int groups = 1 + rng() % 4;
    std::vector<std::set<std::string>> w(groups);
    for (auto& g : w) {
      int n = 1 + rng() % 3;
      for (int k = 0; k < n; ++k) g.insert(oracle::random_string(rng, "abcé", 1, 12));
    }
    auto got = syn_lcs(w);
    auto want = oracle::brute_syn_lcs(w);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    EXPECT_EQ(got->literal, want->literal);
    EXPECT_EQ(got->pred, want->pred);
    EXPECT_EQ(strongest_predicate(w, got->literal), want->pred);
  }
}
