#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cqs/relational.hpp"

namespace cqs {

enum class StrPred { Equal, Prefix, Suffix, Contain };

const char* to_string(StrPred p);
StrPred parse_pred(const std::string& s);
bool holds(StrPred p, const std::string& value, const std::string& literal);
// 3 for equal, 2 for prefix and suffix, 1 for contain.
int strength(StrPred p);

// from.attr = to.id, where attr is a foreign key of from's relation targeting to's relation.
struct EqEdge {
  int from = 0;
  int attr = 0;
  int to = 0;
  bool operator==(const EqEdge&) const = default;
};

struct StrConstraint {
  int node = 0;
  int attr = 0;
  StrPred pred = StrPred::Equal;
  std::string literal;
  bool operator==(const StrConstraint&) const = default;
};

// Nodes hold relation indices; node 0 is the head. Aliases are A1..Am by position.
struct QueryGraph {
  std::vector<int> nodes;
  std::vector<EqEdge> eqs;
  std::vector<StrConstraint> strs;

  int size() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
  const StrConstraint* constraint_at(int node, int attr) const;
  bool operator==(const QueryGraph&) const = default;
};

struct Equality {
  std::string pk_alias;
  std::string fk_alias;
  std::string fk_attr;
};

struct StringCondition {
  std::string alias;
  std::string attr;
  StrPred pred = StrPred::Equal;
  std::string literal;
};

using AtomicCondition = std::variant<Equality, StringCondition>;

struct ConjunctiveQuery {
  std::string head_alias = "A1";
  std::vector<std::pair<std::string, std::string>> product;  // (alias, relation)
  std::vector<AtomicCondition> condition;
};

std::string alias_name(int node);

// Throws GraphError on schema-illegal conditions or unknown aliases.
QueryGraph to_graph(const ConjunctiveQuery& q, const Schema& schema);
ConjunctiveQuery from_graph(const QueryGraph& g, const Schema& schema);

// Legality of every edge and constraint against the schema.
void check_graph(const QueryGraph& g, const Schema& schema);
bool is_connected(const QueryGraph& g);

int multiplicity(const QueryGraph& g, int relation);
int multiplicity(const QueryGraph& g, const Schema& schema, const std::string& relation);
int max_multiplicity(const QueryGraph& g);

// Identical for graphs equal up to renaming of the non-head aliases.
std::string canonical_form(const QueryGraph& g, const Schema& schema);

int complexity(const QueryGraph& g);
int complexity(const ConjunctiveQuery& q);

struct GraphCounts {
  int relations = 0;
  int equalities = 0;
  int strings = 0;
  bool operator==(const GraphCounts&) const = default;
};
GraphCounts counts(const QueryGraph& g);

std::string render_ra(const ConjunctiveQuery& q);
std::string render_ra(const QueryGraph& g, const Schema& schema);
std::string render_datalog(const QueryGraph& g, const Schema& schema);
// Accepts the rule form produced by render_datalog. Throws ParseError.
QueryGraph parse_datalog(const std::string& text, const Schema& schema);
std::string render_dot(const QueryGraph& g, const Schema& schema);
nlohmann::json query_to_json(const QueryGraph& g, const Schema& schema);

}  // namespace cqs
