#include "cqs/selection.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>

namespace cqs {

using nlohmann::json;

std::string Fraction::str() const {
  long g = std::gcd(num, den);
  if (g == 0) g = 1;
  long n = num / g, d = den / g;
  return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

const std::set<std::string>& EntityContext::words(const std::string& rel, const std::string& attr) const {
  static const std::set<std::string> none;
  auto it = h.find({rel, attr});
  return it == h.end() ? none : it->second;
}

EntityContext load_hmap(const json& doc) {
  EntityContext ctx;
  if (!doc.is_object() || !doc.contains("dictionary") || !doc.contains("h"))
    throw ContextError("hmap document needs 'dictionary' and 'h'");
  for (const auto& w : doc["dictionary"]) ctx.dictionary.insert(w.get<std::string>());
  for (auto it = doc["h"].begin(); it != doc["h"].end(); ++it) {
    const auto& key = it.key();
    auto dot = key.find('.');
    if (dot == std::string::npos) throw ContextError("h key '" + key + "' is not Relation.attribute");
    auto& words = ctx.h[{key.substr(0, dot), key.substr(dot + 1)}];
    for (const auto& w : it.value()) {
      auto s = w.get<std::string>();
      if (!ctx.dictionary.count(s)) throw ContextError("h word '" + s + "' is not in the dictionary");
      words.insert(s);
    }
  }
  return ctx;
}

std::set<std::string> extract_entities(const std::string& description, const std::set<std::string>& dictionary) {
  std::set<std::string> out;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    std::vector<std::string> forms{tok};
    auto n = tok.size();
    if (n > 3 && tok.compare(n - 3, 3, "ies") == 0) forms.push_back(tok.substr(0, n - 3) + "y");
    if (n > 2 && tok.compare(n - 2, 2, "es") == 0) forms.push_back(tok.substr(0, n - 2));
    if (n > 1 && tok.back() == 's') forms.push_back(tok.substr(0, n - 1));
    for (const auto& f : forms)
      if (dictionary.count(f)) {
        out.insert(f);
        break;
      }
    tok.clear();
  };
  for (unsigned char c : description) {
    if (std::isalnum(c))
      tok += static_cast<char>(std::tolower(c));
    else
      flush();
  }
  flush();
  return out;
}

// Attribute slots whose h-words count: both sides of each equality and the
// attribute of each string constraint, plus the id of every relation occurring.
static std::set<std::pair<int, int>> touched_slots(const QueryGraph& g) {
  std::set<std::pair<int, int>> slots;
  for (const auto& e : g.eqs) {
    slots.insert({g.nodes[e.to], 0});
    slots.insert({g.nodes[e.from], e.attr});
    slots.insert({g.nodes[e.from], 0});
  }
  for (const auto& s : g.strs) {
    slots.insert({g.nodes[s.node], s.attr});
    slots.insert({g.nodes[s.node], 0});
  }
  return slots;
}

Fraction coverage(const QueryGraph& g, const Schema& schema, const EntityContext& ctx) {
  if (ctx.entities.empty()) throw ContextError("description has no named entities");
  std::set<std::string> hit;
  for (auto [r, a] : touched_slots(g)) {
    const auto& rel = schema.relation(r);
    for (const auto& w : ctx.words(rel.name, rel.attributes[a].name))
      if (ctx.entities.count(w)) hit.insert(w);
  }
  return {static_cast<long>(hit.size()), static_cast<long>(ctx.entities.size())};
}

Fraction coverage(const ConjunctiveQuery& q, const Schema& schema, const EntityContext& ctx) {
  return coverage(to_graph(q, schema), schema, ctx);
}

static int compare_metrics(Fraction a1, int b1, Fraction a2, int b2) {
  if (a1 != a2) return a1 > a2 ? -1 : 1;
  if (b1 != b2) return b1 < b2 ? -1 : 1;
  return 0;
}

int compare(const QueryGraph& q1, const QueryGraph& q2, const Schema& schema, const EntityContext& ctx) {
  return compare_metrics(coverage(q1, schema, ctx), complexity(q1), coverage(q2, schema, ctx), complexity(q2));
}

int compare(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2, const Schema& schema, const EntityContext& ctx) {
  return compare(to_graph(q1, schema), to_graph(q2, schema), schema, ctx);
}

Fraction coverage_bound(const Schema& schema, const std::vector<int>& kept, const EntityContext& ctx) {
  if (ctx.entities.empty()) throw ContextError("description has no named entities");
  std::set<int> keep(kept.begin(), kept.end());
  std::set<std::string> hit;
  for (int r : kept) {
    const auto& rel = schema.relation(r);
    for (int a = 0; a < rel.arity(); ++a) {
      int t = schema.fk_target(r, a);
      if (rel.attributes[a].kind == AttrKind::ForeignKey && !keep.count(t)) continue;
      for (const auto& w : ctx.words(rel.name, rel.attributes[a].name))
        if (ctx.entities.count(w)) hit.insert(w);
    }
  }
  return {static_cast<long>(hit.size()), static_cast<long>(ctx.entities.size())};
}

SynthesisResult synthesize(const Database& db, const RelationPartition& part, const EntityContext& ctx,
                           const SynthesisOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& schema = db.schema();
  if (ctx.entities.empty()) throw ContextError("description has no named entities");
  SynthesisResult res;
  res.reduced = opts.use_reduction ? reduce(db, part) : keep_all(db);
  res.alpha_bound = coverage_bound(schema, res.reduced.kept_index, ctx);
  const int K = std::max(1, opts.K);
  int max_m = K * static_cast<int>(res.reduced.kept_index.size());
  if (opts.max_m > 0) max_m = std::min(max_m, opts.max_m);

  RefinementState state;
  if (opts.budget_seconds > 0)
    state.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opts.budget_seconds));
  bool have = false;
  std::vector<std::pair<std::string, QueryGraph>> chosen;

  auto finish = [&]() {
    std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, g] : chosen) res.selected.push_back(std::move(g));
    res.stats = state.stats;
    res.explored = state.explored();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  };

  for (int m = 1; m <= max_m; ++m) {
    for (int k = 1; k <= std::min(K, m); ++k) {
      if (m > 1 && state.S_R(m - 1, k - 1).empty() && state.S_R(m - 1, k).empty()) continue;
      refine(state, db, part, m, k, res.reduced.kept_index);
      res.levels_explored.emplace_back(m, k);
      for (const auto& g : state.S_C(m, k)) {
        Fraction a = coverage(g, schema, ctx);
        int b = complexity(g);
        int cmp = have ? compare_metrics(a, b, res.alpha_max, res.beta_min) : -1;
        if (cmp < 0) {
          chosen.clear();
          res.alpha_max = a;
          res.beta_min = b;
          have = true;
        }
        if (cmp <= 0) chosen.emplace_back(canonical_form(g, schema), g);
      }
      if (state.interrupted) {
        res.budget_exhausted = true;
        return finish();
      }
      if (!opts.early_stop || !have) continue;
      // Every later graph extends one of these by a node and an edge, so its complexity is at
      // least two above the smallest one here. Stop once nothing later can tie or win.
      int beta_bound = std::numeric_limits<int>::max();
      auto scan = [&](int mm, int kk) {
        for (const auto& g : state.S_R(mm, kk)) beta_bound = std::min(beta_bound, complexity(g));
      };
      for (int j = 1; j <= k; ++j) scan(m, j);
      if (k < std::min(K, m))
        for (int j = k; j <= std::min(K, m - 1); ++j) scan(m - 1, j);
      if (res.alpha_max == res.alpha_bound && (beta_bound == std::numeric_limits<int>::max() || res.beta_min < beta_bound + 2)) {
        res.terminated_early = true;
        return finish();
      }
    }
  }
  return finish();
}

json report_json(const SynthesisResult& res, const Schema& schema) {
  json queries = json::array();
  for (const auto& g : res.selected) {
    auto c = counts(g);
    queries.push_back({{"datalog", render_datalog(g, schema)},
                       {"ra", render_ra(g, schema)},
                       {"graph", query_to_json(g, schema)},
                       {"counts", {c.relations, c.equalities, c.strings}},
                       {"alpha", res.alpha_max.str()},
                       {"beta", complexity(g)}});
  }
  json levels = json::array();
  for (const auto& s : res.stats)
    levels.push_back({{"m", s.m},
                      {"k", s.k},
                      {"worklist", s.worklist},
                      {"explored", s.explored},
                      {"refinable", s.refinable},
                      {"candidates", s.candidates}});
  json dropped = json::array();
  for (const auto& [r, why] : res.reduced.dropped) dropped.push_back({{"relation", r}, {"reason", to_string(why)}});
  return {{"selected", queries},
          {"alpha_max", res.selected.empty() ? json(nullptr) : json(res.alpha_max.str())},
          {"alpha_bound", res.alpha_bound.str()},
          {"beta_min", res.selected.empty() ? json(nullptr) : json(res.beta_min)},
          {"terminated_early", res.terminated_early},
          {"budget_exhausted", res.budget_exhausted},
          {"levels", levels},
          {"explored", res.explored},
          {"kept", res.reduced.kept},
          {"dropped", dropped},
          {"seconds", res.seconds}};
}

std::string report_text(const SynthesisResult& res, const Schema& schema) {
  std::ostringstream os;
  os << "kept relations:";
  for (const auto& r : res.reduced.kept) os << " " << r;
  os << "\n";
  if (res.selected.empty()) {
    os << "no query candidate within bounds\n";
  } else {
    os << "selected " << res.selected.size() << " quer" << (res.selected.size() == 1 ? "y" : "ies")
       << "  alpha=" << res.alpha_max.str() << " beta=" << res.beta_min << "\n";
    for (const auto& g : res.selected) {
      os << "  " << render_datalog(g, schema) << "\n";
      os << "  " << render_ra(g, schema) << "\n";
    }
  }
  os << "levels explored: " << res.levels_explored.size() << (res.terminated_early ? " (early stop)" : "") << (res.budget_exhausted ? " (budget exhausted)" : "")
     << ", graphs explored: " << res.explored << "\n";
  char buf[64];
  snprintf(buf, sizeof buf, "%.3f", res.seconds);
  os << "time: " << buf << " s\n";
  return os.str();
}

}  // namespace cqs
