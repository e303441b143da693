#include "cqs/relational.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cqs {

using nlohmann::json;

int RelationDecl::attr_index(const std::string& attr) const {
  for (size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i].name == attr) return static_cast<int>(i);
  return -1;
}

Schema::Schema(std::vector<RelationDecl> relations) : rels_(std::move(relations)) {
  for (size_t r = 0; r < rels_.size(); ++r) {
    const auto& rel = rels_[r];
    if (rel.name.empty()) throw SchemaError("relation with empty name");
    if (rel.name == "STR") throw SchemaError("relation name STR is reserved");
    if (!by_name_.emplace(rel.name, static_cast<int>(r)).second)
      throw SchemaError("duplicate relation '" + rel.name + "'");
    int pks = 0;
    std::set<std::string> names;
    for (size_t a = 0; a < rel.attributes.size(); ++a) {
      const auto& attr = rel.attributes[a];
      if (!names.insert(attr.name).second)
        throw SchemaError("duplicate attribute '" + attr.name + "' in " + rel.name);
      if (attr.kind == AttrKind::PrimaryKey) {
        ++pks;
        if (a != 0) throw SchemaError("primary key of " + rel.name + " must be the first attribute");
      }
    }
    if (pks != 1)
      throw SchemaError(rel.name + " must have exactly one primary key, found " + std::to_string(pks));
  }
  fk_target_.resize(rels_.size());
  for (size_t r = 0; r < rels_.size(); ++r) {
    for (const auto& attr : rels_[r].attributes) {
      int t = -1;
      if (attr.kind == AttrKind::ForeignKey) {
        t = index_of(attr.target);
        if (t < 0)
          throw SchemaError("foreign key " + rels_[r].name + "." + attr.name + " targets unknown relation '" +
                            attr.target + "'");
      }
      fk_target_[r].push_back(t);
    }
  }
}

int Schema::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

const RelationDecl& Schema::relation(const std::string& name) const {
  int r = index_of(name);
  if (r < 0) throw SchemaError("unknown relation '" + name + "'");
  return rels_[r];
}

std::vector<int> Schema::sorted_by_name() const {
  std::vector<int> idx(rels_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rels_[a].name < rels_[b].name; });
  return idx;
}

Database::Database(Schema schema, std::vector<Relation> relations) : schema_(std::move(schema)) {
  const int n = schema_.size();
  rels_.resize(n);
  for (int r = 0; r < n; ++r) rels_[r].name = schema_.relation(r).name;
  for (auto& rel : relations) {
    int r = schema_.index_of(rel.name);
    if (r < 0) throw FactError("facts for undeclared relation '" + rel.name + "'");
    auto& dst = rels_[r].tuples;
    dst.insert(dst.end(), std::make_move_iterator(rel.tuples.begin()), std::make_move_iterator(rel.tuples.end()));
  }

  pk_index_.resize(n);
  for (int r = 0; r < n; ++r) {
    const auto& decl = schema_.relation(r);
    auto& tuples = rels_[r].tuples;
    for (size_t i = 0; i < tuples.size(); ++i) {
      const auto& t = tuples[i];
      if (static_cast<int>(t.size()) != decl.arity())
        throw FactError("arity mismatch in " + decl.name + ": expected " + std::to_string(decl.arity()) +
                        ", got " + std::to_string(t.size()));
      for (int a = 0; a < decl.arity(); ++a) {
        bool want_entity = decl.attributes[a].kind != AttrKind::String;
        if (t[a].is_entity() != want_entity)
          throw FactError("kind mismatch in " + decl.name + "." + decl.attributes[a].name);
      }
      if (!pk_index_[r].emplace(t[0].text, static_cast<int>(i)).second)
        throw FactError("duplicate primary key '" + t[0].text + "' in " + decl.name);
    }
  }

  fk_rows_.resize(n);
  back_.resize(n);
  for (int r = 0; r < n; ++r) {
    const auto& decl = schema_.relation(r);
    fk_rows_[r].resize(decl.arity());
    back_[r].resize(decl.arity());
    for (int a = 0; a < decl.arity(); ++a) {
      int t = schema_.fk_target(r, a);
      if (t < 0) continue;
      back_[r][a].resize(rels_[t].tuples.size());
      for (size_t i = 0; i < rels_[r].tuples.size(); ++i) {
        const auto& v = rels_[r].tuples[i][a].text;
        auto it = pk_index_[t].find(v);
        if (it == pk_index_[t].end())
          throw FactError("dangling foreign key " + decl.name + "." + decl.attributes[a].name + " = '" + v +
                          "' (no " + rels_[t].name + " with that id)");
        fk_rows_[r][a].push_back(it->second);
        back_[r][a][it->second].push_back(static_cast<int>(i));
      }
    }
  }
}

int Database::row_of(int r, const std::string& pk) const {
  auto it = pk_index_.at(r).find(pk);
  return it == pk_index_[r].end() ? -1 : it->second;
}

static AttrKind parse_kind(const std::string& k) {
  if (k == "pk") return AttrKind::PrimaryKey;
  if (k == "fk") return AttrKind::ForeignKey;
  if (k == "str" || k == "string") return AttrKind::String;
  throw SchemaError("unknown attribute kind '" + k + "'");
}

Schema schema_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("relations") || !doc["relations"].is_array())
    throw SchemaError("schema document needs a 'relations' array");
  std::vector<RelationDecl> rels;
  for (const auto& jr : doc["relations"]) {
    RelationDecl rel;
    if (!jr.contains("name") || !jr["name"].is_string()) throw SchemaError("relation without a name");
    rel.name = jr["name"].get<std::string>();
    if (!jr.contains("attributes") || !jr["attributes"].is_array())
      throw SchemaError("relation " + rel.name + " has no attribute list");
    for (const auto& ja : jr["attributes"]) {
      AttributeDecl a;
      if (!ja.contains("name") || !ja.contains("kind")) throw SchemaError("malformed attribute in " + rel.name);
      a.name = ja["name"].get<std::string>();
      a.kind = parse_kind(ja["kind"].get<std::string>());
      if (a.kind == AttrKind::ForeignKey) {
        if (!ja.contains("target")) throw SchemaError("foreign key " + rel.name + "." + a.name + " without target");
        a.target = ja["target"].get<std::string>();
      }
      rel.attributes.push_back(std::move(a));
    }
    rels.push_back(std::move(rel));
  }
  return Schema(std::move(rels));
}

json schema_to_json(const Schema& schema) {
  json rels = json::array();
  for (const auto& rel : schema.relations()) {
    json attrs = json::array();
    for (const auto& a : rel.attributes) {
      json ja = {{"name", a.name}};
      switch (a.kind) {
        case AttrKind::PrimaryKey: ja["kind"] = "pk"; break;
        case AttrKind::ForeignKey: ja["kind"] = "fk"; ja["target"] = a.target; break;
        case AttrKind::String: ja["kind"] = "str"; break;
      }
      attrs.push_back(std::move(ja));
    }
    rels.push_back({{"name", rel.name}, {"attributes", std::move(attrs)}});
  }
  return {{"relations", std::move(rels)}};
}

Database load_facts(const Schema& schema, const json& facts_doc) {
  if (!facts_doc.is_object()) throw FactError("facts document must be an object");
  std::vector<Relation> rels;
  for (auto it = facts_doc.begin(); it != facts_doc.end(); ++it) {
    int r = schema.index_of(it.key());
    if (r < 0) throw FactError("facts for undeclared relation '" + it.key() + "'");
    const auto& decl = schema.relation(r);
    Relation rel{decl.name, {}};
    std::set<Tuple> seen;
    if (!it.value().is_array()) throw FactError("facts for " + decl.name + " must be an array");
    for (const auto& row : it.value()) {
      if (!row.is_array()) throw FactError("tuple in " + decl.name + " must be an array");
      if (static_cast<int>(row.size()) != decl.arity())
        throw FactError("arity mismatch in " + decl.name + ": expected " + std::to_string(decl.arity()) +
                        ", got " + std::to_string(row.size()));
      Tuple t;
      for (int a = 0; a < decl.arity(); ++a) {
        if (!row[a].is_string())
          throw FactError("kind mismatch in " + decl.name + "." + decl.attributes[a].name + ": expected a string");
        auto s = row[a].get<std::string>();
        t.push_back(decl.attributes[a].kind == AttrKind::String ? Value::str(std::move(s))
                                                                : Value::entity(std::move(s)));
      }
      // Identical duplicates collapse; conflicting ones are caught by the key check.
      if (seen.insert(t).second) rel.tuples.push_back(std::move(t));
    }
    rels.push_back(std::move(rel));
  }
  return Database(schema, std::move(rels));
}

Database load_facts(const json& schema_doc, const json& facts_doc) {
  return load_facts(schema_from_json(schema_doc), facts_doc);
}

json facts_to_json(const Database& db) {
  json out = json::object();
  for (const auto& rel : db.relations()) {
    json rows = json::array();
    for (const auto& t : rel.tuples) {
      json row = json::array();
      for (const auto& v : t) row.push_back(v.text);
      rows.push_back(std::move(row));
    }
    out[rel.name] = std::move(rows);
  }
  return out;
}

RelationPartition make_partition(const std::string& target, const std::set<std::string>& positive_ids,
                                 const Database& db) {
  int r = db.schema().index_of(target);
  if (r < 0) throw PartitionError("unknown target relation '" + target + "'");
  RelationPartition part;
  part.target = target;
  part.target_index = r;
  part.is_positive.assign(db.rows(r), 0);
  for (const auto& id : positive_ids) {
    int row = db.row_of(r, id);
    if (row < 0) throw PartitionError("unknown id '" + id + "' in " + target);
    part.is_positive[row] = 1;
  }
  for (int row = 0; row < db.rows(r); ++row) {
    if (part.is_positive[row]) {
      part.positive_rows.push_back(row);
      part.positives.push_back(db.tuple(r, row));
    } else {
      part.negative_rows.push_back(row);
      part.negatives.push_back(db.tuple(r, row));
    }
  }
  if (part.positives.empty()) throw PartitionError("partition of " + target + " has no positive tuples");
  if (part.negatives.empty()) throw PartitionError("partition of " + target + " has no negative tuples");
  return part;
}

RelationPartition partition_from_json(const json& doc, const Database& db) {
  if (!doc.is_object() || !doc.contains("target") || !doc.contains("positive"))
    throw PartitionError("partition document needs 'target' and 'positive'");
  std::set<std::string> ids;
  for (const auto& id : doc["positive"]) ids.insert(id.get<std::string>());
  if (doc.contains("negative")) {
    // Optional explicit negatives must be consistent with the complement.
    for (const auto& id : doc["negative"]) {
      if (ids.count(id.get<std::string>()))
        throw PartitionError("id '" + id.get<std::string>() + "' is both positive and negative");
    }
  }
  return make_partition(doc["target"].get<std::string>(), ids, db);
}

json partition_to_json(const RelationPartition& part) {
  json pos = json::array();
  json neg = json::array();
  for (const auto& t : part.positives) pos.push_back(t[0].text);
  for (const auto& t : part.negatives) neg.push_back(t[0].text);
  return {{"target", part.target}, {"positive", pos}, {"negative", neg}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace cqs
