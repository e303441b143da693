#include "cqs/schema_graph.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cqs {

SchemaGraph build_schema_graph(const Schema& schema) {
  SchemaGraph g;
  g.schema = &schema;
  for (int r : schema.sorted_by_name()) g.nodes.push_back(schema.relation(r).name);
  g.nodes.push_back("STR");
  for (int r : schema.sorted_by_name()) {
    const auto& rel = schema.relation(r);
    std::vector<SchemaEdge> local;
    for (int a = 0; a < rel.arity(); ++a) {
      const auto& attr = rel.attributes[a];
      if (attr.kind == AttrKind::ForeignKey)
        local.push_back({r, schema.fk_target(r, a), a, attr.name});
      else if (attr.kind == AttrKind::String)
        local.push_back({r, kStrNode, a, attr.name});
    }
    std::sort(local.begin(), local.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
    g.edges.insert(g.edges.end(), local.begin(), local.end());
  }
  g.incident.resize(schema.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.to == kStrNode) continue;
    g.incident[edge.from].push_back(static_cast<int>(e));
    if (edge.to != edge.from) g.incident[edge.to].push_back(static_cast<int>(e));
  }
  return g;
}

std::vector<int> UndirectedRelationPath::node_sequence() const {
  std::vector<int> seq{start};
  for (const auto& s : steps) seq.push_back(s.next);
  return seq;
}

std::string attr_name(const Schema& schema, int current, const PathStep& step) {
  int owner = step.dir > 0 ? current : step.next;
  return schema.relation(owner).attributes.at(step.attr).name;
}

std::string to_string(const UndirectedRelationPath& p, const Schema& schema) {
  std::ostringstream os;
  os << schema.relation(p.start).name;
  int cur = p.start;
  for (const auto& s : p.steps) {
    os << " -(" << attr_name(schema, cur, s) << "," << (s.dir > 0 ? "+1" : "-1") << ")-> "
       << schema.relation(s.next).name;
    cur = s.next;
  }
  return os.str();
}

std::vector<PathStep> steps_from(const SchemaGraph& g, int r) {
  std::vector<PathStep> out;
  for (int e : g.incident[r]) {
    const auto& edge = g.edges[e];
    if (edge.from == r) out.push_back({edge.attr, +1, edge.to});
    if (edge.to == r) out.push_back({edge.attr, -1, edge.from});
  }
  return out;
}

std::vector<UndirectedRelationPath> acyclic_paths(const SchemaGraph& g, int from, int to) {
  std::vector<UndirectedRelationPath> out;
  if (from == to) {
    out.push_back({from, {}});
    return out;
  }
  const int n = static_cast<int>(g.incident.size());
  std::vector<std::vector<PathStep>> adj(n);
  for (int r = 0; r < n; ++r) adj[r] = steps_from(g, r);
  std::vector<char> on_path(n, 0);
  UndirectedRelationPath cur{from, {}};
  on_path[from] = 1;
  auto dfs = [&](auto&& self, int node) -> void {
    for (const auto& s : adj[node]) {
      if (on_path[s.next]) continue;
      cur.steps.push_back(s);
      if (s.next == to) {
        out.push_back(cur);
      } else {
        on_path[s.next] = 1;
        self(self, s.next);
        on_path[s.next] = 0;
      }
      cur.steps.pop_back();
    }
  };
  dfs(dfs, from);
  return out;
}

std::vector<int> Cycle::intermediates() const {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < steps.size(); ++i) out.push_back(steps[i].next);
  return out;
}

std::vector<Cycle> cycles_at(const SchemaGraph& g, int anchor, int max_len) {
  const int n = static_cast<int>(g.incident.size());
  std::vector<std::vector<PathStep>> adj(n);
  for (int r = 0; r < n; ++r) adj[r] = steps_from(g, r);
  std::vector<Cycle> out;
  std::vector<char> used(n, 0);
  used[anchor] = 1;
  std::vector<PathStep> cur;
  auto dfs = [&](auto&& self, int node) -> void {
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (const auto& s : adj[node]) {
      if (s.next == anchor) {
        // Both orientations are kept: walking a cycle the other way activates other tuples.
        cur.push_back(s);
        out.push_back({anchor, cur});
        cur.pop_back();
        continue;
      }
      if (used[s.next]) continue;
      used[s.next] = 1;
      cur.push_back(s);
      self(self, s.next);
      cur.pop_back();
      used[s.next] = 0;
    }
  };
  dfs(dfs, anchor);
  return out;
}

static void augment_impl(const UndirectedRelationPath& path, const std::vector<std::vector<Cycle>>& cycles,
                         const std::function<bool(const UndirectedRelationPath&)>& fn) {
  if (!fn(path)) return;
  auto seq = path.node_sequence();
  std::vector<char> earlier(cycles.size(), 0);
  for (size_t i = 0; i < seq.size(); ++i) {
    int v = seq[i];
    for (const auto& c : cycles[v]) {
      // A cycle through an earlier path node was already spliced there.
      bool skip = false;
      for (size_t j = 0; j + 1 < c.steps.size(); ++j)
        if (earlier[c.steps[j].next]) { skip = true; break; }
      if (skip) continue;
      UndirectedRelationPath out{path.start, {}};
      out.steps.assign(path.steps.begin(), path.steps.begin() + i);
      out.steps.insert(out.steps.end(), c.steps.begin(), c.steps.end());
      out.steps.insert(out.steps.end(), path.steps.begin() + i, path.steps.end());
      if (!fn(out)) return;
    }
    earlier[v] = 1;
  }
}

void for_each_augmented(const UndirectedRelationPath& path, const SchemaGraph& g,
                        const std::function<bool(const UndirectedRelationPath&)>& fn, int max_len) {
  std::vector<std::vector<Cycle>> cycles(g.incident.size());
  for (size_t r = 0; r < cycles.size(); ++r) cycles[r] = cycles_at(g, static_cast<int>(r), max_len);
  augment_impl(path, cycles, fn);
}

void for_each_augmented_cached(const UndirectedRelationPath& path, const std::vector<std::vector<Cycle>>& cycles,
                               const std::function<bool(const UndirectedRelationPath&)>& fn) {
  augment_impl(path, cycles, fn);
}

std::vector<UndirectedRelationPath> augment_with_cycles(const std::vector<UndirectedRelationPath>& paths,
                                                        const SchemaGraph& g, int max_len) {
  std::vector<std::vector<Cycle>> cycles(g.incident.size());
  for (size_t r = 0; r < cycles.size(); ++r) cycles[r] = cycles_at(g, static_cast<int>(r), max_len);
  std::vector<UndirectedRelationPath> out;
  for (const auto& p : paths)
    augment_impl(p, cycles, [&](const UndirectedRelationPath& q) {
      out.push_back(q);
      return true;
    });
  return out;
}

bool path_is_legal(const UndirectedRelationPath& p, const SchemaGraph& g) {
  int cur = p.start;
  for (const auto& s : p.steps) {
    bool found = false;
    for (const auto& e : g.edges) {
      if (e.to == kStrNode) continue;
      if (s.dir > 0 && e.from == cur && e.to == s.next && e.attr == s.attr) found = true;
      if (s.dir < 0 && e.from == s.next && e.to == cur && e.attr == s.attr) found = true;
      if (found) break;
    }
    if (!found) return false;
    cur = s.next;
  }
  return true;
}

std::vector<int> activated_rows(const Database& db, int start_row, const UndirectedRelationPath& p) {
  std::vector<int> cur{start_row};
  int rel = p.start;
  std::vector<char> mark;
  for (const auto& s : p.steps) {
    mark.assign(db.rows(s.next), 0);
    std::vector<int> nxt;
    for (int row : cur) {
      if (s.dir > 0) {
        int t = db.fk_row(rel, s.attr, row);
        if (!mark[t]) { mark[t] = 1; nxt.push_back(t); }
      } else {
        for (int t : db.back_refs(s.next, s.attr, row))
          if (!mark[t]) { mark[t] = 1; nxt.push_back(t); }
      }
    }
    std::sort(nxt.begin(), nxt.end());
    cur = std::move(nxt);
    rel = s.next;
    if (cur.empty()) break;
  }
  return cur;
}

std::vector<Tuple> activated_relation(const Tuple& t0, const UndirectedRelationPath& p, const Database& db) {
  int row = db.row_of(p.start, t0.at(0).text);
  if (row < 0 || db.tuple(p.start, row) != t0)
    throw EvalError("tuple does not belong to " + db.schema().relation(p.start).name);
  std::vector<Tuple> out;
  for (int r : activated_rows(db, row, p)) out.push_back(db.tuple(p.end(), r));
  return out;
}

std::string schema_graph_dot(const SchemaGraph& g, const std::vector<std::string>& keep) {
  const auto& schema = *g.schema;
  auto kept = [&](const std::string& name) {
    return keep.empty() || name == "STR" || std::find(keep.begin(), keep.end(), name) != keep.end();
  };
  std::ostringstream os;
  os << "digraph schema {\n";
  for (const auto& n : g.nodes) {
    if (!kept(n)) continue;
    os << "  \"" << n << "\"";
    if (n == "STR") os << " [shape=box, style=filled, fillcolor=gray]";
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    const auto& from = schema.relation(e.from).name;
    std::string to = e.to == kStrNode ? "STR" : schema.relation(e.to).name;
    if (!kept(from) || !kept(to)) continue;
    os << "  \"" << from << "\" -> \"" << to << "\" [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cqs
