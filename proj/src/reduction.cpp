#include "cqs/reduction.hpp"

#include <algorithm>

namespace cqs {

const char* to_string(DropReason r) {
  switch (r) {
    case DropReason::EmptyActivation: return "EmptyActivation";
    case DropReason::IndistinguishableActivation: return "IndistinguishableActivation";
    case DropReason::Unreachable: return "Unreachable";
  }
  return "?";
}

bool ReducedRepresentation::keeps(const std::string& name) const {
  return std::find(kept.begin(), kept.end(), name) != kept.end();
}

ReducedRepresentation reduce(const Database& db, const RelationPartition& part, int cycle_cap) {
  const auto& schema = db.schema();
  auto g = build_schema_graph(schema);
  std::vector<std::vector<Cycle>> cycles(schema.size());
  for (int r = 0; r < schema.size(); ++r) cycles[r] = cycles_at(g, r, cycle_cap);

  ReducedRepresentation out;
  const int target = part.target_index;
  for (int r : schema.sorted_by_name()) {
    const auto& name = schema.relation(r).name;
    if (r == target) {
      out.kept.push_back(name);
      out.kept_index.push_back(r);
      continue;
    }
    auto paths = acyclic_paths(g, target, r);
    if (paths.empty()) {
      out.dropped.emplace_back(name, DropReason::Unreachable);
      continue;
    }
    bool kept = false;
    bool some_full = false;  // a path on which no positive activation is empty
    std::vector<std::vector<int>> pos_act(part.positive_rows.size());
    for (const auto& base : paths) {
      for_each_augmented_cached(base, cycles, [&](const UndirectedRelationPath& p) {
        ++out.paths_examined;
        for (size_t i = 0; i < part.positive_rows.size(); ++i) {
          pos_act[i] = activated_rows(db, part.positive_rows[i], p);
          if (pos_act[i].empty()) return true;
        }
        some_full = true;
        for (int n : part.negative_rows) {
          auto neg = activated_rows(db, n, p);
          for (const auto& pa : pos_act)
            if (pa != neg) {
              kept = true;
              return false;
            }
        }
        return true;
      });
      if (kept) break;
    }
    if (kept) {
      out.kept.push_back(name);
      out.kept_index.push_back(r);
    } else {
      out.dropped.emplace_back(name, some_full ? DropReason::IndistinguishableActivation
                                               : DropReason::EmptyActivation);
    }
  }
  return out;
}

ReducedRepresentation keep_all(const Database& db) {
  ReducedRepresentation out;
  for (int r : db.schema().sorted_by_name()) {
    out.kept.push_back(db.schema().relation(r).name);
    out.kept_index.push_back(r);
  }
  return out;
}

}  // namespace cqs
