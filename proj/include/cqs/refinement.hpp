#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cqs/query.hpp"
#include "cqs/relational.hpp"
#include "cqs/schema_graph.hpp"

namespace cqs {

struct LevelStats {
  int m = 0;
  int k = 0;
  long worklist = 0;    // |W|
  long explored = 0;    // graphs evaluated at this level
  long refinable = 0;   // |S_R(m,k)|
  long candidates = 0;  // |S_C(m,k)|
};

struct RefinementState {
  std::map<std::pair<int, int>, std::vector<QueryGraph>> refinable;
  std::map<std::pair<int, int>, std::vector<QueryGraph>> candidates;
  // Canonical form -> 0 not refinable, 1 refinable, 2 refinable and already strengthened.
  std::unordered_map<std::string, char> seen;
  std::vector<LevelStats> stats;
  // Optional wall-clock limit. When it passes, refine returns with a partial level and sets interrupted.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool interrupted = false;

  const std::vector<QueryGraph>& S_R(int m, int k) const;
  const std::vector<QueryGraph>& S_C(int m, int k) const;
  long explored() const;
};

// New node of relation r joined to g by every non-empty subset of legal edges.
// For the empty graph, the single head node when r is the target.
std::vector<QueryGraph> expand(const QueryGraph& g, int r, const Schema& schema, int target);

void refine(RefinementState& state, const Database& db, const RelationPartition& part, int m, int k,
            const std::vector<int>& reduced);

}  // namespace cqs
