#pragma once

#include <set>
#include <string>
#include <vector>

#include "cqs/query.hpp"
#include "cqs/relational.hpp"

namespace cqs {

// Backtracking join over a query graph. Construction validates the graph
// against the database schema and precomputes per-node string filters.
class GraphEvaluator {
public:
  GraphEvaluator(const Database& db, const QueryGraph& g);

  // Whether some assignment with the head bound to head_row satisfies every atom.
  bool holds(int head_row) const;
  // Same, with node `pin` additionally bound to pin_row.
  bool holds_pinned(int head_row, int pin, int pin_row) const;
  // Sorted head rows in the result.
  std::vector<int> result_rows() const;
  // Values of (node, attr) over satisfying assignments with the head at head_row.
  std::set<std::string> witness_values(int head_row, int node, int attr) const;

private:
  struct Step {
    int node = 0;
    enum Gen { Pinned, Forward, Back, Scan } gen = Scan;
    int other = -1;  // assigned node the generator reads from
    int attr = -1;   // label of the generator edge
    std::vector<int> checks;  // indices into eqs to verify once node is placed
  };

  std::vector<Step> plan(const std::vector<int>& bound, int prefer) const;
  bool ok_row(int node, int row) const;
  bool search(const std::vector<Step>& steps, size_t i, std::vector<int>& asg) const;
  template <class F>
  void candidates(const Step& s, const std::vector<int>& asg, F&& f) const;

  const Database& db_;
  const QueryGraph& g_;
  std::vector<std::vector<char>> filter_;  // empty vector: no string constraint on that node
  std::vector<Step> head_plan_;
};

std::vector<int> evaluate_rows(const QueryGraph& g, const Database& db);
std::vector<Tuple> evaluate(const ConjunctiveQuery& q, const Database& db);

bool is_refinable(const QueryGraph& g, const Database& db, const RelationPartition& part);
bool is_candidate(const QueryGraph& g, const Database& db, const RelationPartition& part);
bool is_refinable(const ConjunctiveQuery& q, const Database& db, const RelationPartition& part);
bool is_candidate(const ConjunctiveQuery& q, const Database& db, const RelationPartition& part);

// One witness set per positive tuple, in partition order.
using WitnessSets = std::vector<std::set<std::string>>;
WitnessSets collect_witnesses(const QueryGraph& g, int node, int attr, const RelationPartition& part,
                              const Database& db);

}  // namespace cqs
