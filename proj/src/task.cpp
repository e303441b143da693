#include "cqs/task.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "cqs/evaluator.hpp"
#include "cqs/extractor.hpp"
#include "cqs/schema_graph.hpp"

namespace cqs {

namespace fs = std::filesystem;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TaskSpec load_task_spec(const std::string& task_json_path) {
  auto doc = read_json_file(task_json_path);
  TaskSpec t;
  fs::path dir = fs::path(task_json_path).parent_path();
  t.dir = dir.string();
  t.name = doc.value("name", dir.filename().string());
  auto rel = [&](const char* key) -> std::string {
    if (!doc.contains(key)) return "";
    return (dir / doc.at(key).get<std::string>()).lexically_normal().string();
  };
  t.source = rel("source");
  t.schema_path = rel("schema");
  t.facts_path = rel("facts");
  t.partition_path = rel("partition");
  t.hmap_path = rel("hmap");
  t.golden_path = rel("golden");
  t.target = doc.value("target", "");
  t.description = doc.value("description", "");
  t.K = doc.value("K", 2);
  if (doc.contains("counts")) {
    auto c = doc.at("counts");
    t.expect_counts = GraphCounts{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()};
  }
  if (doc.contains("k")) t.expect_k = doc.at("k").get<int>();
  if (t.source.empty() && (t.schema_path.empty() || t.facts_path.empty() || t.partition_path.empty()))
    throw Error(task_json_path + ": needs either source or schema/facts/partition");
  if (t.hmap_path.empty()) throw Error(task_json_path + ": missing hmap");
  return t;
}

LoadedTask load_task(const TaskSpec& spec) {
  LoadedTask out;
  if (!spec.source.empty()) {
    auto ex = extract_source(read_text_file(spec.source), spec.target);
    out.db = std::move(ex.db);
    out.part = std::move(ex.part);
    out.positions = std::move(ex.positions);
  } else {
    out.db = load_facts(read_json_file(spec.schema_path), read_json_file(spec.facts_path));
    out.part = partition_from_json(read_json_file(spec.partition_path), out.db);
  }
  out.ctx = load_hmap(read_json_file(spec.hmap_path));
  out.ctx.entities = extract_entities(spec.description, out.ctx.dictionary);
  return out;
}

std::vector<QueryGraph> parse_rules(const std::string& text, const Schema& schema) {
  std::vector<QueryGraph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    out.push_back(parse_datalog(line, schema));
  }
  return out;
}

std::pair<int, int> reduced_graph_size(const Schema& schema, const std::vector<int>& kept) {
  std::set<int> keep(kept.begin(), kept.end());
  int nodes = static_cast<int>(keep.size()), edges = 0;
  bool str = false;
  for (int r : keep) {
    const auto& decl = schema.relation(r);
    for (int a = 1; a < decl.arity(); ++a) {
      if (decl.attributes[a].kind == AttrKind::String) {
        ++edges;
        str = true;
      } else if (keep.count(schema.fk_target(r, a))) {
        ++edges;
      }
    }
  }
  return {nodes + (str ? 1 : 0), edges};
}

BenchRow run_bench_task(const TaskSpec& spec, const SynthesisOptions& base) {
  BenchRow row;
  row.name = spec.name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto task = load_task(spec);
    SynthesisOptions opts = base;
    opts.K = spec.K;
    auto res = synthesize(task.db, task.part, task.ctx, opts);
    const auto& schema = task.db.schema();
    row.explored = res.explored;
    auto size = reduced_graph_size(schema, res.reduced.kept_index);
    row.reduced_nodes = size.first;
    row.reduced_edges = size.second;
    std::set<std::string> got, want;
    for (const auto& g : res.selected) {
      got.insert(canonical_form(g, schema));
      row.selected.push_back(render_datalog(g, schema));
      if (!is_candidate(g, task.db, task.part)) row.error = "selected query is not a candidate";
    }
    if (!res.selected.empty()) {
      row.counts = counts(res.selected.front());
      row.k = max_multiplicity(res.selected.front());
    }
    if (!spec.golden_path.empty())
      for (const auto& g : parse_rules(read_text_file(spec.golden_path), schema)) want.insert(canonical_form(g, schema));
    if (row.error.empty()) {
      if (res.selected.empty())
        row.error = "no query synthesized";
      else if (!spec.golden_path.empty() && got != want)
        row.error = "selected set differs from golden";
      else if (spec.expect_counts && !(*spec.expect_counts == row.counts))
        row.error = "counts differ from expected";
      else if (spec.expect_k && *spec.expect_k != row.k)
        row.error = "k differs from expected";
    }
    row.ok = row.error.empty();
  } catch (const Error& e) {
    row.error = std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<TaskSpec> discover_tasks(const std::string& corpus_dir) {
  std::vector<std::string> paths;
  fs::path root(corpus_dir);
  if (!fs::is_directory(root)) throw Error("not a directory: " + corpus_dir);
  if (fs::is_directory(root / "tasks")) root /= "tasks";
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory() && fs::exists(e.path() / "task.json")) paths.push_back((e.path() / "task.json").string());
  std::sort(paths.begin(), paths.end());
  std::vector<TaskSpec> out;
  for (const auto& p : paths) out.push_back(load_task_spec(p));
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<TaskSpec>& tasks, const SynthesisOptions& opts, int jobs) {
  std::vector<BenchRow> rows(tasks.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) rows[i] = run_bench_task(tasks[i], opts);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %-6s %-10s %-3s %-9s %-9s %-8s\n", "task", "result", "|G_Q|", "k", "|G'|",
                "explored", "time(s)");
  out << buf;
  for (const auto& r : rows) {
    std::string gq = "(" + std::to_string(r.counts.relations) + "," + std::to_string(r.counts.equalities) + "," +
                     std::to_string(r.counts.strings) + ")";
    std::string gr = "(" + std::to_string(r.reduced_nodes) + "," + std::to_string(r.reduced_edges) + ")";
    std::snprintf(buf, sizeof buf, "%-28s %-6s %-10s %-3d %-9s %-9ld %-8.3f\n", r.name.c_str(),
                  r.ok ? "pass" : "FAIL", gq.c_str(), r.k, gr.c_str(), r.explored, r.seconds);
    out << buf;
    if (!r.ok) out << "  " << r.error << "\n";
  }
  return out.str();
}

}  // namespace cqs
