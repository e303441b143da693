#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqs/query.hpp"
#include "cqs/relational.hpp"
#include "cqs/selection.hpp"

namespace cqs {

// task.json, paths relative to the task directory:
// { "source": "example.java" | "schema"/"facts"/"partition": ..., "target": "Method",
//   "description": "...", "hmap": "../../hmap.json", "K": 2, "golden": "golden.dl",
//   "counts": [4,3,2], "k": 1 }
struct TaskSpec {
  std::string name;
  std::string dir;
  std::string source;
  std::string schema_path, facts_path, partition_path;
  std::string target;
  std::string description;
  std::string hmap_path;
  int K = 2;
  std::string golden_path;
  std::optional<GraphCounts> expect_counts;
  std::optional<int> expect_k;
};

TaskSpec load_task_spec(const std::string& task_json_path);

struct LoadedTask {
  Database db;
  RelationPartition part;
  EntityContext ctx;
  std::map<std::string, std::string> positions;
};

LoadedTask load_task(const TaskSpec& spec);

// One rule per non-empty line; '%' starts a comment.
std::vector<QueryGraph> parse_rules(const std::string& text, const Schema& schema);

struct BenchRow {
  std::string name;
  bool ok = false;
  std::string error;
  GraphCounts counts;
  int k = 0;
  int reduced_nodes = 0;
  int reduced_edges = 0;
  long explored = 0;
  double seconds = 0;
  std::vector<std::string> selected;  // datalog renderings
};

// Nodes and edges of the schema graph restricted to the kept relations (STR counted when reached).
std::pair<int, int> reduced_graph_size(const Schema& schema, const std::vector<int>& kept);

BenchRow run_bench_task(const TaskSpec& spec, const SynthesisOptions& opts);
// Task directories are the subdirectories of corpus_dir/tasks (or corpus_dir itself) holding task.json.
std::vector<TaskSpec> discover_tasks(const std::string& corpus_dir);
std::vector<BenchRow> run_bench(const std::vector<TaskSpec>& tasks, const SynthesisOptions& opts, int jobs = 1);
std::string bench_table(const std::vector<BenchRow>& rows);

std::string read_text_file(const std::string& path);

}  // namespace cqs
