#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cqs/relational.hpp"

namespace cqs {

constexpr int kStrNode = -1;

struct SchemaEdge {
  int from = 0;   // relation index
  int to = 0;     // relation index, or kStrNode
  int attr = 0;   // attribute index within `from`
  std::string label;
};

struct SchemaGraph {
  const Schema* schema = nullptr;
  std::vector<std::string> nodes;  // relation names sorted, then "STR"
  std::vector<SchemaEdge> edges;   // sorted by (from name, label)

  // Foreign key edges incident to a relation, in edge order.
  std::vector<std::vector<int>> incident;
};

SchemaGraph build_schema_graph(const Schema& schema);

struct PathStep {
  int attr = 0;  // attribute index; owned by the current relation when dir = +1, by `next` when dir = -1
  int dir = 1;
  int next = 0;

  bool operator==(const PathStep&) const = default;
};

struct UndirectedRelationPath {
  int start = 0;
  std::vector<PathStep> steps;

  int end() const { return steps.empty() ? start : steps.back().next; }
  std::vector<int> node_sequence() const;
  bool operator==(const UndirectedRelationPath&) const = default;
};

std::string attr_name(const Schema& schema, int current, const PathStep& step);
std::string to_string(const UndirectedRelationPath& p, const Schema& schema);

// Steps leaving relation r, one per incident foreign key edge and direction.
std::vector<PathStep> steps_from(const SchemaGraph& g, int r);

std::vector<UndirectedRelationPath> acyclic_paths(const SchemaGraph& g, int from, int to);

// A closed walk returning to its anchor. Intermediate nodes are distinct and
// differ from the anchor. A walk and its reversal are listed separately, except
// for an out-and-back over one key, which is its own reversal.
struct Cycle {
  int anchor = 0;
  std::vector<PathStep> steps;

  std::vector<int> intermediates() const;
};

constexpr int kDefaultCycleCap = 8;

std::vector<Cycle> cycles_at(const SchemaGraph& g, int anchor, int max_len = kDefaultCycleCap);

// Calls `fn` for the input path and for each splice of a cycle at the first path
// node it meets. Stops early when `fn` returns false.
void for_each_augmented(const UndirectedRelationPath& path, const SchemaGraph& g,
                        const std::function<bool(const UndirectedRelationPath&)>& fn,
                        int max_len = kDefaultCycleCap);

void for_each_augmented_cached(const UndirectedRelationPath& path, const std::vector<std::vector<Cycle>>& cycles,
                               const std::function<bool(const UndirectedRelationPath&)>& fn);

std::vector<UndirectedRelationPath> augment_with_cycles(const std::vector<UndirectedRelationPath>& paths,
                                                        const SchemaGraph& g, int max_len = kDefaultCycleCap);

// Whether every step of p corresponds to a schema edge.
bool path_is_legal(const UndirectedRelationPath& p, const SchemaGraph& g);

// Activated relation as sorted row indices of the path's end relation.
std::vector<int> activated_rows(const Database& db, int start_row, const UndirectedRelationPath& p);
std::vector<Tuple> activated_relation(const Tuple& t0, const UndirectedRelationPath& p, const Database& db);

std::string schema_graph_dot(const SchemaGraph& g, const std::vector<std::string>& keep = {});

}  // namespace cqs
