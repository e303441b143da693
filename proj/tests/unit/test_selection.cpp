#include <gtest/gtest.h>

#include "cqs/evaluator.hpp"
#include "cqs/selection.hpp"
#include "fixtures.hpp"

using namespace cqs;
using nlohmann::json;

namespace {

// The five relations with an extra name attribute on Method.
Schema named_schema() {
  auto doc = read_json_file(fixture::corpus("fig1/schema.json"));
  for (auto& r : doc["relations"])
    if (r["name"] == "Method") r["attributes"].push_back({{"name", "name"}, {"kind", "str"}});
  return schema_from_json(doc);
}

Database single(const std::vector<std::pair<std::string, std::string>>& rows) {
  json schema = {{"relations",
                  {{{"name", "Method"},
                    {"attributes", {{{"name", "id"}, {"kind", "pk"}}, {{"name", "name"}, {"kind", "str"}}}}}}}};
  json facts = {{"Method", json::array()}};
  for (auto& [id, n] : rows) facts["Method"].push_back({id, n});
  return load_facts(schema, facts);
}

EntityContext single_ctx() {
  EntityContext ctx;
  ctx.dictionary = {"method", "name"};
  ctx.h[{"Method", "id"}] = {"method"};
  ctx.h[{"Method", "name"}] = {"name"};
  ctx.entities = {"method", "name"};
  return ctx;
}

}  // namespace

TEST(Selection, CoverageAndComplexityOfExample) {
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto ctx = fixture::paper_ctx();
  auto g = fixture::fig1_query(s);
  EXPECT_EQ(coverage(g, s, ctx), (Fraction{1, 1}));
  EXPECT_EQ(complexity(g), 9);
  QueryGraph bare{{s.index_of("Method")}, {}, {}};
  EXPECT_EQ(coverage(bare, s, ctx), (Fraction{0, 1}));
  EXPECT_EQ(complexity(bare), 1);
}

TEST(Selection, RankingOfAlternatives) {
  auto s = named_schema();
  auto ctx = fixture::paper_ctx();
  int name = s.relation("Method").attr_index("name");
  QueryGraph c1{{s.index_of("Method")}, {}, {{0, name, StrPred::Equal, "foo"}}};
  auto rq = parse_datalog(
      "out(X1, X2, R, X4, N) :- Method(X1, X2, R, X4, N), Type(R, RN), Parameter(_, _, P, X1), Type(P, PN), "
      "str_equal(RN, \"CacheConfig\"), str_equal(PN, \"Log4jUtils\").",
      s);
  auto c2 = rq;
  c2.strs.push_back({0, name, StrPred::Equal, "foo"});
  EXPECT_EQ(coverage(c1, s, ctx), (Fraction{1, 4}));
  EXPECT_EQ(complexity(c1), 2);
  EXPECT_EQ(coverage(c2, s, ctx), (Fraction{1, 1}));
  EXPECT_EQ(complexity(c2), 10);
  EXPECT_GT(compare(c1, rq, s, ctx), 0);
  EXPECT_GT(compare(c2, rq, s, ctx), 0);
  EXPECT_GT(compare(c1, c2, s, ctx), 0);
  EXPECT_LT(compare(rq, c2, s, ctx), 0);
  EXPECT_EQ(compare(rq, rq, s, ctx), 0);
  EXPECT_EQ(compare(from_graph(c1, s), from_graph(rq, s), s, ctx), compare(c1, rq, s, ctx));
}

TEST(Selection, ExtractEntities) {
  auto bundled = load_hmap(read_json_file(fixture::corpus("hmap.json")));
  EXPECT_EQ(extract_entities(
                "Find all the methods receiving a Log4jUtils-type parameter and giving a CacheConfig-type return",
                bundled.dictionary),
            (std::set<std::string>{"method", "type", "parameter", "return"}));
  EXPECT_TRUE(extract_entities("", bundled.dictionary).empty());
  EXPECT_EQ(extract_entities("public static methods", {"method", "static", "modifier"}),
            (std::set<std::string>{"method", "static"}));
  EXPECT_EQ(extract_entities("Classes, CLASS; classy", {"class"}), (std::set<std::string>{"class"}));
}

TEST(Selection, HmapValidation) {
  EXPECT_THROW(load_hmap(json{{"dictionary", {"a"}}, {"h", {{"R.x", {"b"}}}}}), ContextError);
  EXPECT_THROW(load_hmap(json{{"dictionary", {"a"}}, {"h", {{"Rx", {"a"}}}}}), ContextError);
  EXPECT_THROW(load_hmap(json{{"h", json::object()}}), ContextError);
  auto t = fixture::fig1();
  EntityContext none = fixture::paper_ctx();
  none.entities.clear();
  EXPECT_THROW(synthesize(t.db, t.part, none), ContextError);
}

TEST(Selection, CoverageBound) {
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto ctx = fixture::paper_ctx();
  ctx.entities = {"method", "modifier"};
  std::vector<int> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(coverage_bound(s, all, ctx), (Fraction{1, 1}));
  std::vector<int> no_mod;
  for (int r : all)
    if (r != s.index_of("Modifier")) no_mod.push_back(r);
  EXPECT_EQ(coverage_bound(s, no_mod, ctx), (Fraction{1, 2}));
}

TEST(Selection, SynthesizesExampleQuery) {
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto res = synthesize(t.db, t.part, t.ctx);
  ASSERT_EQ(res.selected.size(), 1u);
  EXPECT_EQ(canonical_form(res.selected[0], s), canonical_form(fixture::fig1_query(s), s));
  EXPECT_EQ(res.alpha_max, (Fraction{1, 1}));
  EXPECT_EQ(res.beta_min, 9);
  EXPECT_TRUE(res.terminated_early);
  SynthesisOptions full;
  full.early_stop = false;
  full.max_m = 6;
  auto res2 = synthesize(t.db, t.part, t.ctx, full);
  ASSERT_EQ(res2.selected.size(), 1u);
  EXPECT_EQ(res2.selected[0], res.selected[0]);
  EXPECT_GT(res2.explored, res.explored);
  auto j = report_json(res, s);
  EXPECT_EQ(j["beta_min"], 9);
  EXPECT_EQ(j["alpha_max"], "1");
  EXPECT_NE(report_text(res, s).find("CacheConfig"), std::string::npos);
}

TEST(Selection, SmallHmapPrefersNameQuery) {
  // With h limited to Method attributes and Parameter.id, a name equality plus
  // two unconstrained joins covers every entity more cheaply.
  auto t = fixture::fig1();
  const auto& s = t.db.schema();
  auto res = synthesize(t.db, t.part, fixture::paper_ctx());
  EXPECT_EQ(res.alpha_max, (Fraction{1, 1}));
  EXPECT_EQ(res.beta_min, 8);
  auto want = canonical_form(fixture::fig1_query(s), s);
  for (const auto& g : res.selected) {
    EXPECT_NE(canonical_form(g, s), want);
    EXPECT_TRUE(is_candidate(g, t.db, t.part));
  }
}

TEST(Selection, OnlyNameEqualityCandidate) {
  auto db = single({{"M1", "foo"}, {"M2", "bar"}, {"M3", "baz"}});
  auto part = make_partition("Method", {"M1"}, db);
  auto ctx = single_ctx();
  auto res = synthesize(db, part, ctx);
  ASSERT_EQ(res.selected.size(), 1u);
  QueryGraph want{{0}, {}, {{0, 1, StrPred::Equal, "foo"}}};
  EXPECT_EQ(res.selected[0], want);
  EXPECT_EQ(res.alpha_max, coverage(want, db.schema(), ctx));
  EXPECT_EQ(res.beta_min, 2);
}

TEST(Selection, NoCandidateGivesEmptyResult) {
  auto db = single({{"M1", "foo"}, {"M2", "foo"}});
  auto part = make_partition("Method", {"M1"}, db);
  auto res = synthesize(db, part, single_ctx());
  EXPECT_TRUE(res.selected.empty());
  EXPECT_FALSE(res.terminated_early);
  EXPECT_EQ(res.levels_explored.size(), 3u);  // (1,1), (2,1), (2,2)
}

TEST(Selection, BudgetStopsSearch) {
  auto t = fixture::fig1();
  SynthesisOptions o;
  o.early_stop = false;
  o.budget_seconds = 1e-9;
  auto res = synthesize(t.db, t.part, t.ctx, o);
  EXPECT_TRUE(res.budget_exhausted);
}
