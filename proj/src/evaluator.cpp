#include "cqs/evaluator.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

namespace cqs {

GraphEvaluator::GraphEvaluator(const Database& db, const QueryGraph& g) : db_(db), g_(g) {
  try {
    check_graph(g, db.schema());
  } catch (const GraphError& e) {
    throw EvalError(std::string("malformed query: ") + e.what());
  }
  if (g.empty()) throw EvalError("malformed query: no relations");
  filter_.resize(g.size());
  for (const auto& s : g.strs) {
    int r = g.nodes[s.node];
    auto& f = filter_[s.node];
    if (f.empty()) f.assign(db.rows(r), 1);
    for (int row = 0; row < db.rows(r); ++row)
      if (f[row] && !cqs::holds(s.pred, db.text(r, row, s.attr), s.literal)) f[row] = 0;
  }
  head_plan_ = plan({0}, -1);
}

std::vector<GraphEvaluator::Step> GraphEvaluator::plan(const std::vector<int>& bound, int prefer) const {
  const int m = g_.size();
  std::vector<char> placed(m, 0);
  std::vector<Step> steps;
  auto add_checks = [&](Step& s) {
    for (size_t e = 0; e < g_.eqs.size(); ++e) {
      const auto& ed = g_.eqs[e];
      bool touches = (ed.from == s.node && (placed[ed.to] || ed.to == s.node)) ||
                     (ed.to == s.node && placed[ed.from]);
      if (!touches) continue;
      bool is_gen = (s.gen == Step::Forward && ed.from == s.other && ed.to == s.node && ed.attr == s.attr) ||
                    (s.gen == Step::Back && ed.from == s.node && ed.to == s.other && ed.attr == s.attr);
      if (is_gen) continue;
      s.checks.push_back(static_cast<int>(e));
    }
  };
  for (int b : bound) {
    Step s;
    s.node = b;
    s.gen = Step::Pinned;
    add_checks(s);
    placed[b] = 1;
    steps.push_back(std::move(s));
  }
  // Distance to the preferred node, so it is reached as early as possible.
  std::vector<int> dist(m, std::numeric_limits<int>::max());
  if (prefer >= 0) {
    std::deque<int> q{prefer};
    dist[prefer] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : g_.eqs) {
        int u = e.from == v ? e.to : e.to == v ? e.from : -1;
        if (u >= 0 && dist[u] == std::numeric_limits<int>::max()) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
      }
    }
  }
  while (static_cast<int>(steps.size()) < m) {
    Step best;
    double best_cost = std::numeric_limits<double>::infinity();
    int best_dist = std::numeric_limits<int>::max();
    for (int v = 0; v < m; ++v) {
      if (placed[v]) continue;
      Step s;
      s.node = v;
      double cost = static_cast<double>(db_.rows(g_.nodes[v])) + 1e6;
      for (const auto& e : g_.eqs) {
        if (e.to == v && e.from != v && placed[e.from]) {
          if (cost > 0) {
            cost = 0;
            s.gen = Step::Forward;
            s.other = e.from;
            s.attr = e.attr;
          }
        } else if (e.from == v && e.to != v && placed[e.to]) {
          double fan = static_cast<double>(db_.rows(g_.nodes[v])) / std::max(1, db_.rows(g_.nodes[e.to])) + 1;
          if (fan < cost) {
            cost = fan;
            s.gen = Step::Back;
            s.other = e.to;
            s.attr = e.attr;
          }
        }
      }
      if (s.gen == Step::Scan) cost = static_cast<double>(db_.rows(g_.nodes[v])) + 1e6;
      // Connected nodes first, then closeness to the preferred node, then cost.
      int d = dist[v];
      bool scan = s.gen == Step::Scan;
      bool better = best_cost == std::numeric_limits<double>::infinity() ||
                    std::make_tuple(scan, d, cost) <
                        std::make_tuple(best.gen == Step::Scan, best_dist, best_cost);
      if (better) {
        best = s;
        best_cost = cost;
        best_dist = d;
      }
    }
    add_checks(best);
    placed[best.node] = 1;
    steps.push_back(std::move(best));
  }
  return steps;
}

bool GraphEvaluator::ok_row(int node, int row) const {
  const auto& f = filter_[node];
  return f.empty() || f[row];
}

template <class F>
void GraphEvaluator::candidates(const Step& s, const std::vector<int>& asg, F&& f) const {
  int r = g_.nodes[s.node];
  switch (s.gen) {
    case Step::Pinned:
      f(asg[s.node]);
      break;
    case Step::Forward:
      f(db_.fk_row(g_.nodes[s.other], s.attr, asg[s.other]));
      break;
    case Step::Back:
      for (int row : db_.back_refs(r, s.attr, asg[s.other]))
        if (!f(row)) return;
      break;
    case Step::Scan:
      for (int row = 0; row < db_.rows(r); ++row)
        if (!f(row)) return;
      break;
  }
}

// Checks placement of step s at row (asg[s.node] already set).
static bool edges_hold(const Database& db, const QueryGraph& g, const std::vector<int>& checks,
                       const std::vector<int>& asg) {
  for (int e : checks) {
    const auto& ed = g.eqs[e];
    if (db.fk_row(g.nodes[ed.from], ed.attr, asg[ed.from]) != asg[ed.to]) return false;
  }
  return true;
}

bool GraphEvaluator::search(const std::vector<Step>& steps, size_t i, std::vector<int>& asg) const {
  if (i == steps.size()) return true;
  const auto& s = steps[i];
  bool found = false;
  candidates(s, asg, [&](int row) {
    if (!ok_row(s.node, row)) return true;
    asg[s.node] = row;
    if (edges_hold(db_, g_, s.checks, asg) && search(steps, i + 1, asg)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool GraphEvaluator::holds(int head_row) const {
  std::vector<int> asg(g_.size(), -1);
  asg[0] = head_row;
  return search(head_plan_, 0, asg);
}

bool GraphEvaluator::holds_pinned(int head_row, int pin, int pin_row) const {
  std::vector<int> asg(g_.size(), -1);
  asg[0] = head_row;
  if (pin == 0) return pin_row == head_row && holds(head_row);
  asg[pin] = pin_row;
  return search(plan({0, pin}, -1), 0, asg);
}

std::vector<int> GraphEvaluator::result_rows() const {
  std::vector<int> out;
  for (int row = 0; row < db_.rows(g_.nodes[0]); ++row)
    if (holds(row)) out.push_back(row);
  return out;
}

std::set<std::string> GraphEvaluator::witness_values(int head_row, int node, int attr) const {
  std::set<std::string> out;
  if (node == 0) {
    if (holds(head_row)) out.insert(db_.text(g_.nodes[0], head_row, attr));
    return out;
  }
  auto steps = plan({0}, node);
  size_t at = 0;
  while (steps[at].node != node) ++at;
  std::vector<int> asg(g_.size(), -1);
  asg[0] = head_row;
  const int rel = g_.nodes[node];
  // Enumerate up to the witness node, then only ask for one completion per new value.
  auto rec = [&](auto&& self, size_t i) -> void {
    const auto& s = steps[i];
    candidates(s, asg, [&](int row) {
      if (!ok_row(s.node, row)) return true;
      if (i == at && out.count(db_.text(rel, row, attr))) return true;
      asg[s.node] = row;
      if (!edges_hold(db_, g_, s.checks, asg)) return true;
      if (i < at) {
        self(self, i + 1);
      } else if (search(steps, i + 1, asg)) {
        out.insert(db_.text(rel, row, attr));
      }
      return true;
    });
  };
  rec(rec, 0);
  return out;
}

std::vector<int> evaluate_rows(const QueryGraph& g, const Database& db) {
  return GraphEvaluator(db, g).result_rows();
}

static QueryGraph graph_for_eval(const ConjunctiveQuery& q, const Database& db) {
  try {
    return to_graph(q, db.schema());
  } catch (const GraphError& e) {
    throw EvalError(std::string("malformed query: ") + e.what());
  }
}

std::vector<Tuple> evaluate(const ConjunctiveQuery& q, const Database& db) {
  auto g = graph_for_eval(q, db);
  std::vector<Tuple> out;
  for (int row : evaluate_rows(g, db)) out.push_back(db.tuple(g.nodes[0], row));
  return out;
}

static void check_head(const QueryGraph& g, const RelationPartition& part) {
  if (g.empty() || g.nodes[0] != part.target_index) throw EvalError("query head is not the partition target");
}

bool is_refinable(const QueryGraph& g, const Database& db, const RelationPartition& part) {
  check_head(g, part);
  GraphEvaluator ev(db, g);
  for (int row : part.positive_rows)
    if (!ev.holds(row)) return false;
  return true;
}

bool is_candidate(const QueryGraph& g, const Database& db, const RelationPartition& part) {
  if (!is_refinable(g, db, part)) return false;
  GraphEvaluator ev(db, g);
  for (int row : part.negative_rows)
    if (ev.holds(row)) return false;
  return true;
}

bool is_refinable(const ConjunctiveQuery& q, const Database& db, const RelationPartition& part) {
  return is_refinable(graph_for_eval(q, db), db, part);
}

bool is_candidate(const ConjunctiveQuery& q, const Database& db, const RelationPartition& part) {
  return is_candidate(graph_for_eval(q, db), db, part);
}

WitnessSets collect_witnesses(const QueryGraph& g, int node, int attr, const RelationPartition& part,
                              const Database& db) {
  GraphEvaluator ev(db, g);
  WitnessSets out;
  for (int row : part.positive_rows) out.push_back(ev.witness_values(row, node, attr));
  return out;
}

}  // namespace cqs
