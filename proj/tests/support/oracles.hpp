#pragma once

// Independent reference implementations used by the unit and acceptance tests.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cqs/query.hpp"
#include "cqs/relational.hpp"
#include "cqs/schema_graph.hpp"
#include "cqs/selection.hpp"
#include "cqs/string_constraints.hpp"

namespace oracle {

using namespace cqs;

std::string source_dir();  // repository root

// Predicates written out directly on bytes.
bool pred_holds(StrPred p, const std::string& v, const std::string& lit);

// Full Cartesian product over the graph's nodes, filtered by every atom.
// Returns sorted head rows.
std::vector<int> naive_rows(const QueryGraph& g, const Database& db);

// Every substring of the first group's strings, checked against all groups.
std::optional<SynthesizedConstraint> brute_syn_lcs(const std::vector<std::set<std::string>>& w);
std::u32string decode(const std::string& s);

// Activated relation: build every chain of tuples along p, keep the consistent ones, project the last.
std::set<int> chained_activation(const Database& db, int start_row, const UndirectedRelationPath& p);

// Canonical string by trying every ordering of the non-head nodes.
std::string perm_canonical(const QueryGraph& g);

struct BruteCandidate {
  QueryGraph graph;
  Fraction alpha;
  int beta = 0;
};

struct BruteResult {
  std::vector<BruteCandidate> candidates;  // one per canonical form
  long graphs = 0;
};

// Every graph built from the head by adding connected nodes over `relations`
// (m <= max_m, multiplicity <= K). After each node addition, optionally one
// string slot is constrained with brute_syn_lcs over the witnesses. No pruning.
BruteResult brute_enumerate(const Database& db, const RelationPartition& part, const EntityContext* ctx,
                            const std::vector<int>& relations, int max_m, int K);

// Top equivalence class under (alpha desc, beta asc), as canonical forms.
struct BruteOptimum {
  bool any = false;
  Fraction alpha;
  int beta = 0;
  std::set<std::string> top;
};
BruteOptimum brute_optimum(const BruteResult& r);

// Random instance generation.
struct Instance {
  Database db;
  RelationPartition part;
  EntityContext ctx;
};

struct GenOptions {
  int max_relations = 4;
  int max_tuples = 15;
  std::string alphabet = "ab";
  int max_str_len = 3;
};

Instance random_instance(std::mt19937& rng, const GenOptions& opt);
Schema random_schema(std::mt19937& rng, int max_relations);
Database random_database(std::mt19937& rng, const Schema& schema, int max_tuples, const std::string& alphabet,
                         int max_str_len);
// A random graph over the schema, not necessarily connected, with random string atoms.
QueryGraph random_graph(std::mt19937& rng, const Database& db, int max_nodes, long max_product);
std::string random_string(std::mt19937& rng, const std::string& alphabet, int min_len, int max_len);

}  // namespace oracle
