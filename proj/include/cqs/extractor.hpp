#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqs/minijava.hpp"
#include "cqs/relational.hpp"

namespace cqs {

// The fixed relational schema produced from mini-Java sources.
const Schema& extraction_schema();

struct Extraction {
  Database db;
  RelationPartition part;
  std::map<std::string, std::string> positions;  // entity id -> "line:col"
};

// Facts for the program plus the partition of `target` built from the
// /*@pos*/ and /*@neg*/ markers. Unmarked target tuples are negative.
Extraction extract(const mj::Program& prog, const std::string& target);
Extraction extract_source(const std::string& source, const std::string& target);
// Several compilation units share one id space, numbered in the given order.
// With labels, positions read "label:line:col".
Extraction extract(const std::vector<mj::Program>& progs, const std::string& target,
                   const std::vector<std::string>& labels = {});

// Facts only, with no partition; used for search targets.
Database extract_facts(const mj::Program& prog, std::map<std::string, std::string>* positions = nullptr);
Database extract_facts(const std::vector<mj::Program>& progs, std::map<std::string, std::string>* positions = nullptr,
                       const std::vector<std::string>& labels = {});

}  // namespace cqs
