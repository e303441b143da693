#pragma once

#include <string>
#include <vector>

#include "cqs/relational.hpp"
#include "cqs/schema_graph.hpp"

namespace cqs {

enum class DropReason { EmptyActivation, IndistinguishableActivation, Unreachable };

const char* to_string(DropReason r);

struct ReducedRepresentation {
  std::vector<std::string> kept;  // in schema graph node order
  std::vector<std::pair<std::string, DropReason>> dropped;
  std::vector<int> kept_index;    // relation indices of `kept`
  long paths_examined = 0;

  bool keeps(const std::string& name) const;
};

ReducedRepresentation reduce(const Database& db, const RelationPartition& part,
                             int cycle_cap = kDefaultCycleCap);

// Keeps every relation; used to measure the effect of reduction.
ReducedRepresentation keep_all(const Database& db);

}  // namespace cqs
