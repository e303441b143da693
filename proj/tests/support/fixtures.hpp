#pragma once

#include <string>

#include "cqs/query.hpp"
#include "cqs/selection.hpp"
#include "cqs/task.hpp"
#include "oracles.hpp"

namespace fixture {

inline std::string corpus(const std::string& rel) { return oracle::source_dir() + "/corpus/" + rel; }

// The five-relation instance with positives {M1}.
inline cqs::LoadedTask fig1() { return cqs::load_task(cqs::load_task_spec(corpus("fig1/task.json"))); }

// The small h over Method attributes and Parameter.id, with N(s) = {method, type, parameter, return}.
inline cqs::EntityContext paper_ctx() {
  auto ctx = cqs::load_hmap(cqs::read_json_file(corpus("fig1/hmap_paper.json")));
  ctx.entities = {"method", "type", "parameter", "return"};
  return ctx;
}

inline const char* kFig1Rule =
    "out(X1, X2, R, X4) :- Method(X1, X2, R, X4), Type(R, RN), Parameter(_, _, P, X1), Type(P, PN), "
    "str_equal(RN, \"CacheConfig\"), str_equal(PN, \"Log4jUtils\").";

inline cqs::QueryGraph fig1_query(const cqs::Schema& schema) { return cqs::parse_datalog(kFig1Rule, schema); }

inline int rel(const cqs::Schema& s, const std::string& name) { return s.index_of(name); }

}  // namespace fixture
