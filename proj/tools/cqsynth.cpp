// cqsynth: extract facts from mini-Java, reduce, synthesize and search.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "cqs/evaluator.hpp"
#include "cqs/extractor.hpp"
#include "cqs/reduction.hpp"
#include "cqs/schema_graph.hpp"
#include "cqs/selection.hpp"
#include "cqs/task.hpp"

using namespace cqs;
namespace fs = std::filesystem;

namespace {

struct Inputs {
  std::string task;
  std::vector<std::string> sources;
  std::string schema, facts, partition;
  std::string target;
  std::string description;
  std::string hmap;

  void add_to(CLI::App* app, bool need_partition) {
    app->add_option("--task", task, "task.json");
    app->add_option("--source", sources, "annotated mini-Java files");
    app->add_option("--schema", schema, "schema.json");
    app->add_option("--facts", facts, "facts.json");
    if (need_partition) {
      app->add_option("--partition", partition, "partition.json");
      app->add_option("--target", target, "target relation for --source");
    }
  }

  void add_context(CLI::App* app) {
    app->add_option("--description", description, "natural-language description");
    app->add_option("--hmap", hmap, "hmap.json");
  }

  TaskSpec spec() const {
    TaskSpec t;
    if (!task.empty()) {
      t = load_task_spec(task);
      if (!description.empty()) t.description = description;
      if (!hmap.empty()) t.hmap_path = hmap;
      return t;
    }
    t.name = "cli";
    t.target = target;
    t.description = description;
    t.hmap_path = hmap;
    t.schema_path = schema;
    t.facts_path = facts;
    t.partition_path = partition;
    return t;
  }

  // Database and partition, from a task, annotated sources or JSON files.
  LoadedTask load(bool with_context) const {
    LoadedTask out;
    if (!task.empty() && sources.empty()) {
      auto t = spec();
      if (with_context) return load_task(t);
      if (!t.source.empty()) {
        auto ex = extract_source(read_text_file(t.source), t.target);
        out.db = std::move(ex.db);
        out.part = std::move(ex.part);
        out.positions = std::move(ex.positions);
      } else {
        out.db = load_facts(read_json_file(t.schema_path), read_json_file(t.facts_path));
        out.part = partition_from_json(read_json_file(t.partition_path), out.db);
      }
      return out;
    }
    if (!sources.empty()) {
      if (target.empty()) throw Error("--target is required with --source");
      auto ex = extract(parse_all(), target, labels());
      out.db = std::move(ex.db);
      out.part = std::move(ex.part);
      out.positions = std::move(ex.positions);
    } else {
      if (schema.empty() || facts.empty() || partition.empty())
        throw Error("give --task, --source, or --schema/--facts/--partition");
      out.db = load_facts(read_json_file(schema), read_json_file(facts));
      out.part = partition_from_json(read_json_file(partition), out.db);
    }
    if (with_context) {
      if (hmap.empty()) throw Error("--hmap is required");
      out.ctx = load_hmap(read_json_file(hmap));
      out.ctx.entities = extract_entities(description, out.ctx.dictionary);
    }
    return out;
  }

  std::vector<mj::Program> parse_all() const {
    std::vector<mj::Program> progs;
    for (const auto& s : sources) {
      try {
        progs.push_back(mj::parse(read_text_file(s)));
      } catch (const ParseError& e) {
        throw ParseError(s + ":" + e.what());
      }
    }
    return progs;
  }

  std::vector<std::string> labels() const {
    if (sources.size() <= 1) return {};
    std::vector<std::string> out;
    for (const auto& s : sources) out.push_back(fs::path(s).filename().string());
    return out;
  }
};

void emit(const std::vector<QueryGraph>& qs, const Schema& schema, const std::string& fmt) {
  for (const auto& g : qs) {
    if (fmt == "ra")
      std::cout << render_ra(g, schema) << "\n";
    else if (fmt == "datalog")
      std::cout << render_datalog(g, schema) << "\n";
    else if (fmt == "dot")
      std::cout << render_dot(g, schema);
    else
      std::cout << query_to_json(g, schema).dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjunctive query synthesis for code search"};
  app.require_subcommand(1);

  Inputs in;
  int k_bound = 2;
  bool no_early_stop = false, no_reduction = false, trace = false;
  std::string emit_fmt = "text", report_path, out_dir, query_path, corpus = "corpus";
  int jobs = 1;
  double budget = 0;

  auto* extract_cmd = app.add_subcommand("extract", "mini-Java sources to schema/facts/partition JSON");
  extract_cmd->add_option("sources", in.sources, "source files")->required();
  extract_cmd->add_option("--target", in.target, "relation to partition from @pos/@neg markers");
  extract_cmd->add_option("--out", out_dir, "output directory (default: stdout facts only)");

  auto* reduce_cmd = app.add_subcommand("reduce", "report dummy relations");
  in.add_to(reduce_cmd, true);

  auto* synth_cmd = app.add_subcommand("synthesize", "synthesize optimal conjunctive queries");
  in.add_to(synth_cmd, true);
  in.add_context(synth_cmd);

  auto* search_cmd = app.add_subcommand("search", "evaluate a Datalog rule over target facts");
  search_cmd->add_option("--query", query_path, "file holding one rule")->required();
  in.add_to(search_cmd, false);

  auto* bench_cmd = app.add_subcommand("bench", "run the task corpus");
  bench_cmd->add_option("corpus", corpus, "corpus directory");
  bench_cmd->add_option("--jobs", jobs, "tasks run in parallel");

  auto* graph_cmd = app.add_subcommand("graph", "DOT dump of the schema graph or a query");
  in.add_to(graph_cmd, true);
  graph_cmd->add_option("--query", query_path, "render this rule instead of the schema");
  bool reduced_only = false;
  graph_cmd->add_flag("--reduced", reduced_only, "highlight relations kept by reduction");

  for (auto* c : {synth_cmd, bench_cmd}) {
    c->add_option("--k-bound", k_bound, "multiplicity bound K")->check(CLI::PositiveNumber);
    c->add_flag("--no-early-stop", no_early_stop, "explore every level");
    c->add_flag("--no-reduction", no_reduction, "keep every relation");
    c->add_flag("--trace", trace, "per-level counts on stderr");
    c->add_option("--budget", budget, "seconds per task, keeping what was found so far (0: none)");
  }
  synth_cmd->add_option("--emit", emit_fmt, "text|dot|ra|datalog|json")
      ->check(CLI::IsMember({"text", "dot", "ra", "datalog", "json"}));
  synth_cmd->add_option("--report", report_path, "also write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract_cmd) {
      auto progs = in.parse_all();
      if (in.target.empty()) {
        std::map<std::string, std::string> pos;
        auto db = extract_facts(progs, &pos, in.labels());
        if (out_dir.empty()) {
          std::cout << facts_to_json(db).dump(2) << "\n";
        } else {
          fs::create_directories(out_dir);
          write_json_file(out_dir + "/schema.json", schema_to_json(db.schema()));
          write_json_file(out_dir + "/facts.json", facts_to_json(db));
          write_json_file(out_dir + "/positions.json", nlohmann::json(pos));
        }
        return 0;
      }
      auto ex = extract(progs, in.target, in.labels());
      if (out_dir.empty()) {
        nlohmann::json doc{{"facts", facts_to_json(ex.db)}, {"partition", partition_to_json(ex.part)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        fs::create_directories(out_dir);
        write_json_file(out_dir + "/schema.json", schema_to_json(ex.db.schema()));
        write_json_file(out_dir + "/facts.json", facts_to_json(ex.db));
        write_json_file(out_dir + "/partition.json", partition_to_json(ex.part));
        write_json_file(out_dir + "/positions.json", nlohmann::json(ex.positions));
      }
      return 0;
    }

    if (*reduce_cmd) {
      auto t = in.load(false);
      auto red = reduce(t.db, t.part);
      for (const auto& r : red.kept) std::cout << "kept " << r << "\n";
      for (const auto& [r, why] : red.dropped) std::cout << "dropped " << r << " " << to_string(why) << "\n";
      return 0;
    }

    if (*synth_cmd) {
      auto t = in.load(true);
      SynthesisOptions opts;
      opts.K = k_bound;
      if (!in.task.empty() && synth_cmd->count("--k-bound") == 0) opts.K = in.spec().K;
      opts.early_stop = !no_early_stop;
      opts.use_reduction = !no_reduction;
      opts.budget_seconds = budget;
      auto res = synthesize(t.db, t.part, t.ctx, opts);
      const auto& schema = t.db.schema();
      if (trace)
        for (const auto& s : res.stats)
          std::cerr << "level (" << s.m << "," << s.k << ") |W|=" << s.worklist << " |S_R|=" << s.refinable
                    << " |S_C|=" << s.candidates << " explored=" << s.explored << "\n";
      if (!report_path.empty()) write_json_file(report_path, report_json(res, schema));
      if (emit_fmt == "text")
        std::cout << report_text(res, schema);
      else if (emit_fmt == "json")
        std::cout << report_json(res, schema).dump(2) << "\n";
      else
        emit(res.selected, schema, emit_fmt);
      return res.selected.empty() ? 2 : 0;
    }

    if (*search_cmd) {
      Database db;
      std::map<std::string, std::string> pos;
      if (!in.sources.empty()) {
        db = extract_facts(in.parse_all(), &pos, in.labels());
      } else if (!in.task.empty()) {
        auto spec = in.spec();
        if (!spec.source.empty())
          db = extract_facts(mj::parse(read_text_file(spec.source)), &pos);
        else
          db = load_facts(read_json_file(spec.schema_path), read_json_file(spec.facts_path));
      } else {
        if (in.schema.empty() || in.facts.empty()) throw Error("give --source, --task or --schema/--facts");
        db = load_facts(read_json_file(in.schema), read_json_file(in.facts));
      }
      auto rules = parse_rules(read_text_file(query_path), db.schema());
      if (rules.size() != 1) throw ParseError(query_path + ": expected exactly one rule");
      const auto& g = rules.front();
      for (int row : evaluate_rows(g, db)) {
        const auto& id = db.tuple(g.nodes[0], row)[0].text;
        auto it = pos.find(id);
        std::cout << id;
        if (it != pos.end()) std::cout << " " << it->second;
        std::cout << "\n";
      }
      return 0;
    }

    if (*bench_cmd) {
      SynthesisOptions opts;
      opts.early_stop = !no_early_stop;
      opts.use_reduction = !no_reduction;
      opts.budget_seconds = budget;
      std::vector<TaskSpec> tasks;
      if (fs::is_directory(corpus)) tasks = discover_tasks(corpus);
      if (bench_cmd->count("--k-bound"))
        for (auto& t : tasks) t.K = k_bound;
      auto rows = run_bench(tasks, opts, jobs);
      std::cout << bench_table(rows);
      if (trace)
        for (const auto& r : rows)
          for (const auto& q : r.selected) std::cerr << r.name << ": " << q << "\n";
      bool ok = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.ok; });
      return ok ? 0 : 1;
    }

    if (*graph_cmd) {
      if (!query_path.empty()) {
        Schema schema = extraction_schema();
        if (!in.schema.empty()) schema = schema_from_json(read_json_file(in.schema));
        for (const auto& g : parse_rules(read_text_file(query_path), schema)) std::cout << render_dot(g, schema);
        return 0;
      }
      if (reduced_only) {
        auto t = in.load(false);
        auto red = reduce(t.db, t.part);
        std::cout << schema_graph_dot(build_schema_graph(t.db.schema()), red.kept);
        return 0;
      }
      Schema schema = extraction_schema();
      if (!in.schema.empty()) schema = schema_from_json(read_json_file(in.schema));
      std::cout << schema_graph_dot(build_schema_graph(schema));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
