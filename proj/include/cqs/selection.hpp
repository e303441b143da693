#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cqs/query.hpp"
#include "cqs/reduction.hpp"
#include "cqs/refinement.hpp"
#include "cqs/relational.hpp"

namespace cqs {

struct Fraction {
  long num = 0;
  long den = 1;

  double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
  std::string str() const;
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct EntityContext {
  std::set<std::string> dictionary;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> h;  // (relation, attribute) -> words
  std::set<std::string> entities;                                          // N(s)

  const std::set<std::string>& words(const std::string& rel, const std::string& attr) const;
};

// Reads {"dictionary": [...], "h": {"Rel.attr": [...]}}. Words outside the dictionary are rejected.
EntityContext load_hmap(const nlohmann::json& doc);

std::set<std::string> extract_entities(const std::string& description, const std::set<std::string>& dictionary);

Fraction coverage(const QueryGraph& g, const Schema& schema, const EntityContext& ctx);
Fraction coverage(const ConjunctiveQuery& q, const Schema& schema, const EntityContext& ctx);

// Negative when q1 ranks above q2, positive when below, zero on ties.
int compare(const QueryGraph& q1, const QueryGraph& q2, const Schema& schema, const EntityContext& ctx);
int compare(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2, const Schema& schema, const EntityContext& ctx);

// Highest coverage any query over the kept relations can reach.
Fraction coverage_bound(const Schema& schema, const std::vector<int>& kept, const EntityContext& ctx);

struct SynthesisOptions {
  int K = 2;
  bool early_stop = true;
  bool use_reduction = true;
  int max_m = 0;  // 0: K times the number of kept relations
  double budget_seconds = 0;  // 0: no limit; otherwise stop after this long with what was found
};

struct SynthesisResult {
  std::vector<QueryGraph> selected;  // ordered by canonical form
  Fraction alpha_max;
  Fraction alpha_bound;
  int beta_min = 0;
  bool terminated_early = false;
  bool budget_exhausted = false;
  std::vector<std::pair<int, int>> levels_explored;
  std::vector<LevelStats> stats;
  ReducedRepresentation reduced;
  long explored = 0;
  double seconds = 0;
};

SynthesisResult synthesize(const Database& db, const RelationPartition& part, const EntityContext& ctx,
                           const SynthesisOptions& opts = {});

nlohmann::json report_json(const SynthesisResult& res, const Schema& schema);
std::string report_text(const SynthesisResult& res, const Schema& schema);

}  // namespace cqs
