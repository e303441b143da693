#include "cqs/refinement.hpp"

#include "cqs/evaluator.hpp"
#include "cqs/string_constraints.hpp"

namespace cqs {

static const std::vector<QueryGraph> kNoGraphs;

const std::vector<QueryGraph>& RefinementState::S_R(int m, int k) const {
  auto it = refinable.find({m, k});
  return it == refinable.end() ? kNoGraphs : it->second;
}

const std::vector<QueryGraph>& RefinementState::S_C(int m, int k) const {
  auto it = candidates.find({m, k});
  return it == candidates.end() ? kNoGraphs : it->second;
}

long RefinementState::explored() const {
  long n = 0;
  for (const auto& s : stats) n += s.explored;
  return n;
}

std::vector<QueryGraph> expand(const QueryGraph& g, int r, const Schema& schema, int target) {
  std::vector<QueryGraph> out;
  if (g.empty()) {
    if (r == target) out.push_back(QueryGraph{{r}, {}, {}});
    return out;
  }
  const int n = g.size();
  std::vector<EqEdge> legal;
  const auto& rel = schema.relation(r);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < rel.arity(); ++a)
      if (schema.fk_target(r, a) == g.nodes[i]) legal.push_back({n, a, i});
    const auto& other = schema.relation(g.nodes[i]);
    for (int a = 0; a < other.arity(); ++a)
      if (schema.fk_target(g.nodes[i], a) == r) legal.push_back({i, a, n});
  }
  const size_t c = legal.size();
  if (c == 0 || c > 20) return out;
  for (unsigned long mask = 1; mask < (1ul << c); ++mask) {
    QueryGraph h = g;
    h.nodes.push_back(r);
    for (size_t b = 0; b < c; ++b)
      if (mask & (1ul << b)) h.eqs.push_back(legal[b]);
    out.push_back(std::move(h));
  }
  return out;
}

void refine(RefinementState& state, const Database& db, const RelationPartition& part, int m, int k,
            const std::vector<int>& reduced) {
  const auto& schema = db.schema();
  LevelStats st;
  st.m = m;
  st.k = k;
  struct Item {
    const QueryGraph* g;
    bool same_k;  // taken from S_R(m-1,k) rather than S_R(m-1,k-1)
  };
  std::vector<Item> work;
  QueryGraph empty;
  if (m == 1 && k == 1) work.push_back({&empty, true});
  if (m > 1) {
    for (const auto& g : state.S_R(m - 1, k)) work.push_back({&g, true});
    if (k > 1)
      for (const auto& g : state.S_R(m - 1, k - 1)) work.push_back({&g, false});
  }
  st.worklist = static_cast<long>(work.size());

  std::vector<QueryGraph> sr, sc;
  auto admit = [&](QueryGraph g, bool known_refinable) {
    GraphEvaluator ev(db, g);
    ++st.explored;
    if (!known_refinable)
      for (int row : part.positive_rows)
        if (!ev.holds(row)) return false;
    bool cand = true;
    for (int row : part.negative_rows)
      if (ev.holds(row)) {
        cand = false;
        break;
      }
    if (cand) sc.push_back(g);
    sr.push_back(std::move(g));
    return true;
  };

  for (const auto& item : work) {
    if (state.deadline && std::chrono::steady_clock::now() > *state.deadline) {
      state.interrupted = true;
      break;
    }
    const QueryGraph& g = *item.g;
    for (int r : reduced) {
      int mult = multiplicity(g, r);
      bool ok = item.g == &empty || (item.same_k ? mult < k : mult == k - 1);
      if (!ok) continue;
      for (auto& h : expand(g, r, schema, part.target_index)) {
        auto [it, fresh] = state.seen.try_emplace(canonical_form(h, schema), 0);
        // A graph first reached by strengthening still gets strengthened itself.
        if (!fresh && it->second != 1) continue;
        if (fresh) {
          if (!admit(h, false)) continue;
        }
        it->second = 2;
        // Strengthen the refinable graph once per unconstrained string slot.
        for (int i = 0; i < h.size(); ++i) {
          const auto& rel = schema.relation(h.nodes[i]);
          for (int a = 0; a < rel.arity(); ++a) {
            if (rel.attributes[a].kind != AttrKind::String || h.constraint_at(i, a)) continue;
            auto w = collect_witnesses(h, i, a, part, db);
            auto c = syn_lcs(w);
            if (!c) continue;
            QueryGraph h2 = h;
            h2.strs.push_back({i, a, c->pred, c->literal});
            if (!state.seen.try_emplace(canonical_form(h2, schema), 1).second) continue;
            admit(std::move(h2), true);
          }
        }
      }
    }
  }
  st.refinable = static_cast<long>(sr.size());
  st.candidates = static_cast<long>(sc.size());
  state.refinable[{m, k}] = std::move(sr);
  state.candidates[{m, k}] = std::move(sc);
  state.stats.push_back(st);
}

}  // namespace cqs
