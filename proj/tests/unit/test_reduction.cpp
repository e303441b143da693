#include <gtest/gtest.h>

#include "cqs/reduction.hpp"
#include "fixtures.hpp"

using namespace cqs;
using nlohmann::json;

// Kept iff some augmented path separates a positive from a negative while
// activating something for every positive. Computed with the chained-product oracle.
static std::set<std::string> oracle_kept(const Database& db, const RelationPartition& part) {
  const auto& s = db.schema();
  auto g = build_schema_graph(s);
  std::set<std::string> kept = {part.target};
  for (int r = 0; r < s.size(); ++r) {
    if (r == part.target_index) continue;
    bool keep = false;
    for (const auto& p : augment_with_cycles(acyclic_paths(g, part.target_index, r), g)) {
      std::vector<std::set<int>> pos;
      bool full = true;
      for (int row : part.positive_rows) {
        pos.push_back(oracle::chained_activation(db, row, p));
        full &= !pos.back().empty();
      }
      if (!full) continue;
      for (int n : part.negative_rows) {
        auto neg = oracle::chained_activation(db, n, p);
        for (const auto& a : pos) keep |= a != neg;
      }
      if (keep) break;
    }
    if (keep) kept.insert(s.relation(r).name);
  }
  return kept;
}

TEST(Reduction, Fig1DropsModifier) {
  auto t = fixture::fig1();
  auto red = reduce(t.db, t.part);
  EXPECT_EQ(std::set<std::string>(red.kept.begin(), red.kept.end()),
            (std::set<std::string>{"Identifier", "Method", "Parameter", "Type"}));
  ASSERT_EQ(red.dropped.size(), 1u);
  EXPECT_EQ(red.dropped[0].first, "Modifier");
  EXPECT_EQ(red.dropped[0].second, DropReason::IndistinguishableActivation);
  EXPECT_TRUE(red.keeps("Identifier"));
  EXPECT_EQ(oracle_kept(t.db, t.part), std::set<std::string>(red.kept.begin(), red.kept.end()));
}

TEST(Reduction, EmptyAndUnreachableRelations) {
  auto schema = read_json_file(fixture::corpus("fig1/schema.json"));
  schema["relations"].push_back(
      {{"name", "Annotation"},
       {"attributes", {{{"name", "id"}, {"kind", "pk"}}, {{"name", "method_id"}, {"kind", "fk"}, {"target", "Method"}}}}});
  schema["relations"].push_back({{"name", "Island"}, {"attributes", {{{"name", "id"}, {"kind", "pk"}}}}});
  auto facts = read_json_file(fixture::corpus("fig1/facts.json"));
  facts["Annotation"] = json::array();
  facts["Island"] = json::array({{"X1"}});
  auto db = load_facts(schema, facts);
  auto part = make_partition("Method", {"M1"}, db);
  auto red = reduce(db, part);
  std::map<std::string, DropReason> why(red.dropped.begin(), red.dropped.end());
  EXPECT_EQ(why.at("Annotation"), DropReason::EmptyActivation);
  EXPECT_EQ(why.at("Island"), DropReason::Unreachable);
  EXPECT_EQ(why.at("Modifier"), DropReason::IndistinguishableActivation);
}

TEST(Reduction, KeepAll) {
  auto t = fixture::fig1();
  auto all = keep_all(t.db);
  EXPECT_EQ(all.kept.size(), 5u);
  EXPECT_TRUE(all.dropped.empty());
}

TEST(Reduction, RandomInstancesMatchOracle) {
  std::mt19937 rng(3);
  oracle::GenOptions opt;
  opt.max_relations = 5;
  opt.max_tuples = 20;
  for (int i = 0; i < 200; ++i) {
    auto inst = oracle::random_instance(rng, opt);
    auto red = reduce(inst.db, inst.part);
    std::set<std::string> kept(red.kept.begin(), red.kept.end());
    EXPECT_EQ(kept, oracle_kept(inst.db, inst.part)) << i;
    EXPECT_TRUE(kept.count(inst.part.target));
    EXPECT_EQ(kept.size() + red.dropped.size(), static_cast<size_t>(inst.db.schema().size()));
  }
}

TEST(Reduction, SelfReferenceWalkedForward) {
  // Only N1's parent N2 has a Tag; the other nodes point at N0, which has none.
  // Reaching Tag needs the self-loop taken forward, not backward.
  json schema = {{"relations",
                  {{{"name", "Node"},
                    {"attributes", {{{"name", "id"}, {"kind", "pk"}}, {{"name", "parent"}, {"kind", "fk"}, {"target", "Node"}}}}},
                   {{"name", "Tag"},
                    {"attributes",
                     {{{"name", "id"}, {"kind", "pk"}},
                      {{"name", "node"}, {"kind", "fk"}, {"target", "Node"}},
                      {{"name", "text"}, {"kind", "str"}}}}}}}};
  json facts = json::object();
  facts["Node"] = json::array({json::array({"N0", "N0"}), json::array({"N1", "N2"}), json::array({"N2", "N0"})});
  facts["Tag"] = json::array({json::array({"G0", "N2", "x"})});
  auto db = load_facts(schema, facts);
  auto part = make_partition("Node", {"N1"}, db);
  auto red = reduce(db, part);
  EXPECT_TRUE(red.keeps("Tag"));
  EXPECT_EQ(oracle_kept(db, part), std::set<std::string>(red.kept.begin(), red.kept.end()));
  auto g = build_schema_graph(db.schema());
  EXPECT_EQ(cycles_at(g, 0).size(), 3u);  // parent forward, parent backward, out and back over Tag.node
}
