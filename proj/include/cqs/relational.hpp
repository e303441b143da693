#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace cqs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const { return "Error"; }
};

#define CQS_ERROR(Name)                                      \
  struct Name : Error {                                      \
    using Error::Error;                                      \
    const char* kind() const override { return #Name; }      \
  }

CQS_ERROR(SchemaError);
CQS_ERROR(FactError);
CQS_ERROR(PartitionError);
CQS_ERROR(GraphError);
CQS_ERROR(EvalError);
CQS_ERROR(ContextError);
CQS_ERROR(ParseError);
CQS_ERROR(ExtractError);

#undef CQS_ERROR

struct Value {
  enum class Kind { Entity, Str };
  Kind kind = Kind::Entity;
  std::string text;

  static Value entity(std::string s) { return {Kind::Entity, std::move(s)}; }
  static Value str(std::string s) { return {Kind::Str, std::move(s)}; }
  bool is_entity() const { return kind == Kind::Entity; }

  auto operator<=>(const Value&) const = default;
  bool operator==(const Value&) const = default;
};

using Tuple = std::vector<Value>;

enum class AttrKind { PrimaryKey, ForeignKey, String };

struct AttributeDecl {
  std::string name;
  AttrKind kind = AttrKind::String;
  std::string target;  // only for foreign keys

  bool operator==(const AttributeDecl&) const = default;
};

struct RelationDecl {
  std::string name;
  std::vector<AttributeDecl> attributes;

  int attr_index(const std::string& attr) const;  // -1 when absent
  int arity() const { return static_cast<int>(attributes.size()); }
};

class Schema {
public:
  Schema() = default;
  // Validates names, primary key placement and foreign key targets.
  explicit Schema(std::vector<RelationDecl> relations);

  int size() const { return static_cast<int>(rels_.size()); }
  const RelationDecl& relation(int r) const { return rels_.at(r); }
  const std::vector<RelationDecl>& relations() const { return rels_; }
  int index_of(const std::string& name) const;  // -1 when absent
  const RelationDecl& relation(const std::string& name) const;

  // Index of the first relation by name order, used for deterministic iteration.
  std::vector<int> sorted_by_name() const;

  // For foreign key attributes, the relation index of the target; -1 otherwise.
  int fk_target(int r, int attr) const { return fk_target_.at(r).at(attr); }

private:
  std::vector<RelationDecl> rels_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<std::vector<int>> fk_target_;
};

struct Relation {
  std::string name;
  std::vector<Tuple> tuples;
};

// Facts for a schema, with key resolution precomputed. Rows are addressed by
// their position in the relation's tuple list.
class Database {
public:
  Database() = default;
  Database(Schema schema, std::vector<Relation> relations);

  const Schema& schema() const { return schema_; }
  const Relation& relation(int r) const { return rels_.at(r); }
  const std::vector<Relation>& relations() const { return rels_; }
  int rows(int r) const { return static_cast<int>(rels_.at(r).tuples.size()); }
  const Tuple& tuple(int r, int row) const { return rels_.at(r).tuples.at(row); }
  const std::string& text(int r, int row, int attr) const { return rels_[r].tuples[row][attr].text; }

  int row_of(int r, const std::string& pk) const;  // -1 when absent
  // Row in the target relation referenced by fk attribute attr of (r,row).
  int fk_row(int r, int attr, int row) const { return fk_rows_[r][attr][row]; }
  // Rows of r whose fk attribute attr references target_row.
  const std::vector<int>& back_refs(int r, int attr, int target_row) const {
    return back_[r][attr][target_row];
  }

private:
  Schema schema_;
  std::vector<Relation> rels_;
  std::vector<std::unordered_map<std::string, int>> pk_index_;
  std::vector<std::vector<std::vector<int>>> fk_rows_;
  std::vector<std::vector<std::vector<std::vector<int>>>> back_;
};

struct RelationPartition {
  std::string target;
  std::vector<Tuple> positives;
  std::vector<Tuple> negatives;

  int target_index = -1;
  std::vector<int> positive_rows;
  std::vector<int> negative_rows;
  std::vector<char> is_positive;  // indexed by row of the target relation
};

Schema schema_from_json(const nlohmann::json& doc);
nlohmann::json schema_to_json(const Schema& schema);
Database load_facts(const nlohmann::json& schema_doc, const nlohmann::json& facts_doc);
Database load_facts(const Schema& schema, const nlohmann::json& facts_doc);
nlohmann::json facts_to_json(const Database& db);

RelationPartition make_partition(const std::string& target, const std::set<std::string>& positive_ids,
                                 const Database& db);
RelationPartition partition_from_json(const nlohmann::json& doc, const Database& db);
nlohmann::json partition_to_json(const RelationPartition& part);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace cqs
