#include <gtest/gtest.h>

#include "cqs/relational.hpp"
#include "fixtures.hpp"

using namespace cqs;
using nlohmann::json;

static json fig1_schema() { return read_json_file(fixture::corpus("fig1/schema.json")); }
static json fig1_facts() { return read_json_file(fixture::corpus("fig1/facts.json")); }

TEST(Relational, LoadsFiveRelations) {
  auto db = load_facts(fig1_schema(), fig1_facts());
  const auto& s = db.schema();
  EXPECT_EQ(s.size(), 5);
  const auto& m = s.relation("Method");
  ASSERT_EQ(m.arity(), 4);
  EXPECT_EQ(m.attributes[0].name, "id");
  EXPECT_EQ(m.attributes[1].name, "idf_id");
  EXPECT_EQ(m.attributes[2].name, "ret_type_id");
  EXPECT_EQ(m.attributes[3].name, "mdf_id");
  EXPECT_EQ(m.attributes[3].target, "Modifier");
  EXPECT_EQ(db.rows(s.index_of("Method")), 3);
  EXPECT_EQ(db.rows(s.index_of("Identifier")), 6);
}

TEST(Relational, EmptyRelationAccepted) {
  json facts = fig1_facts();
  facts["Modifier"] = json::array();
  facts["Method"] = json::array();
  facts["Parameter"] = json::array();
  auto db = load_facts(fig1_schema(), facts);
  EXPECT_EQ(db.rows(db.schema().index_of("Modifier")), 0);
}

TEST(Relational, DanglingForeignKey) {
  json facts = fig1_facts();
  facts["Method"].push_back({"M9", "I1", "T99", "MDF1"});
  EXPECT_THROW(load_facts(fig1_schema(), facts), FactError);
}

TEST(Relational, FactErrors) {
  json facts = fig1_facts();
  facts["Type"].push_back({"T1", "other"});
  EXPECT_THROW(load_facts(fig1_schema(), facts), FactError);
  facts = fig1_facts();
  facts["Type"].push_back({"T7"});
  EXPECT_THROW(load_facts(fig1_schema(), facts), FactError);
  facts = fig1_facts();
  facts["Nope"] = json::array();
  EXPECT_THROW(load_facts(fig1_schema(), facts), FactError);
  // identical duplicates collapse
  facts = fig1_facts();
  facts["Type"].push_back({"T1", "Log4jUtils"});
  EXPECT_EQ(load_facts(fig1_schema(), facts).rows(2), 3);
}

TEST(Relational, SchemaErrors) {
  auto bad = [](json rel) { return json{{"relations", json::array({rel})}}; };
  EXPECT_THROW(schema_from_json(bad({{"name", "A"}, {"attributes", {{{"name", "x"}, {"kind", "str"}}}}})),
               SchemaError);
  EXPECT_THROW(schema_from_json(bad({{"name", "A"},
                                     {"attributes",
                                      {{{"name", "id"}, {"kind", "pk"}},
                                       {{"name", "f"}, {"kind", "fk"}, {"target", "B"}}}}})),
               SchemaError);
  EXPECT_THROW(schema_from_json(bad({{"name", "A"},
                                     {"attributes",
                                      {{{"name", "x"}, {"kind", "str"}}, {{"name", "id"}, {"kind", "pk"}}}}})),
               SchemaError);
}

TEST(Relational, SchemaRoundTrip) {
  auto s = schema_from_json(fig1_schema());
  auto s2 = schema_from_json(schema_to_json(s));
  ASSERT_EQ(s.size(), s2.size());
  for (int r = 0; r < s.size(); ++r) {
    EXPECT_EQ(s.relation(r).name, s2.relation(r).name);
    EXPECT_EQ(s.relation(r).attributes, s2.relation(r).attributes);
  }
  auto db = load_facts(s, fig1_facts());
  auto db2 = load_facts(s, facts_to_json(db));
  for (int r = 0; r < s.size(); ++r) EXPECT_EQ(db.relation(r).tuples, db2.relation(r).tuples);
}

TEST(Relational, PartitionSingletonPositive) {
  auto db = load_facts(fig1_schema(), fig1_facts());
  auto part = make_partition("Method", {"M1"}, db);
  ASSERT_EQ(part.positives.size(), 1u);
  Tuple want = {Value::entity("M1"), Value::entity("I1"), Value::entity("T3"), Value::entity("MDF1")};
  EXPECT_EQ(part.positives[0], want);
  EXPECT_EQ(part.negatives.size(), 2u);
}

TEST(Relational, PartitionErrors) {
  auto db = load_facts(fig1_schema(), fig1_facts());
  EXPECT_THROW(make_partition("Method", {"M1", "M2", "M3"}, db), PartitionError);
  EXPECT_THROW(make_partition("Method", {}, db), PartitionError);
  EXPECT_THROW(make_partition("Method", {"M7"}, db), PartitionError);
  EXPECT_THROW(make_partition("Nope", {"M1"}, db), PartitionError);
  json both = {{"target", "Method"}, {"positive", {"M1"}}, {"negative", {"M1"}}};
  EXPECT_THROW(partition_from_json(both, db), PartitionError);
}

TEST(Relational, PartitionIsSetDifference) {
  auto db = load_facts(fig1_schema(), fig1_facts());
  auto part = make_partition("Method", {"M1", "M2"}, db);
  ASSERT_EQ(part.negatives.size(), 1u);
  EXPECT_EQ(part.negatives[0][0].text, "M3");
}

TEST(Relational, RandomPartitionsCoverTarget) {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto inst = oracle::random_instance(rng, {});
    const auto& p = inst.part;
    EXPECT_EQ(p.positive_rows.size() + p.negative_rows.size(), static_cast<size_t>(inst.db.rows(p.target_index)));
    for (int r : p.positive_rows)
      for (int n : p.negative_rows) EXPECT_NE(r, n);
  }
}
