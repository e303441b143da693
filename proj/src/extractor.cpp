#include "cqs/extractor.hpp"

#include <algorithm>
#include <set>

namespace cqs {

namespace {

AttributeDecl pk() { return {"id", AttrKind::PrimaryKey, ""}; }
AttributeDecl fk(const char* name, const char* target) { return {name, AttrKind::ForeignKey, target}; }
AttributeDecl str(const char* name) { return {name, AttrKind::String, ""}; }

Schema make_schema() {
  return Schema({
      {"Method", {pk(), fk("idf_id", "Identifier"), fk("ret_type_id", "Type"), fk("mdf_id", "Modifier")}},
      {"Parameter", {pk(), fk("idf_id", "Identifier"), fk("type_id", "Type"), fk("method_id", "Method")}},
      {"Field",
       {pk(), fk("idf_id", "Identifier"), fk("type_id", "Type"), fk("mdf_id", "Modifier"), fk("class_id", "Class")}},
      {"Class", {pk(), fk("idf_id", "Identifier"), fk("mdf_id", "Modifier"), fk("super_id", "Class"), str("class_kind")}},
      {"LocalVar", {pk(), fk("idf_id", "Identifier"), fk("type_id", "Type"), fk("method_id", "Method")}},
      {"Identifier", {pk(), str("name")}},
      {"Type", {pk(), str("name")}},
      {"Modifier", {pk(), str("name")}},
      {"Call", {pk(), fk("caller_method_id", "Method"), fk("callee_idf_id", "Identifier")}},
      {"Import", {pk(), str("name")}},
      {"IfStmt", {pk(), fk("method_id", "Method"), fk("cond_expr_id", "Expr")}},
      {"Expr", {pk(), str("kind"), fk("method_id", "Method")}},
  });
}

const char* prefix_for(const std::string& rel) {
  static const std::map<std::string, const char*> p = {
      {"Method", "M"},     {"Parameter", "P"}, {"Field", "F"},    {"Class", "C"},
      {"LocalVar", "V"},   {"Identifier", "I"}, {"Type", "T"},    {"Modifier", "MDF"},
      {"Call", "CALL"},    {"Import", "IMP"},   {"IfStmt", "IF"}, {"Expr", "E"}};
  return p.at(rel);
}

std::string modifier_text(const std::vector<std::string>& mods) {
  static const std::vector<std::string> order = {"public", "protected", "private",   "abstract", "static",
                                                 "final",  "transient", "volatile", "synchronized", "native"};
  std::string out;
  for (const auto& m : order)
    if (std::find(mods.begin(), mods.end(), m) != mods.end()) out += (out.empty() ? "" : " ") + m;
  return out;
}

class Builder {
public:
  Builder(const std::vector<const mj::Program*>& progs, const std::string& target,
          const std::vector<std::string>& labels = {})
      : schema_(extraction_schema()), progs_(progs), target_(target), labels_(labels) {
    rows_.resize(schema_.size());
    counters_.resize(schema_.size(), 0);
  }

  void run() {
    // Source classes get ids before any synthetic ones.
    for (size_t pi = 0; pi < progs_.size(); ++pi)
      for (const auto& c : progs_[pi]->classes) {
        if (class_ids_.count(c.name)) continue;
        class_ids_[c.name] = next_id("Class");
      }
    for (size_t pi = 0; pi < progs_.size(); ++pi) {
      prog_ = static_cast<int>(pi);
      const auto& prog = *progs_[pi];
      for (const auto& imp : prog.imports) add("Import", {imp.name}, imp.token);
      std::vector<std::pair<int, const void*>> items;
      for (const auto& c : prog.classes) items.emplace_back(c.token, &c);
      for (const auto& m : prog.methods) items.emplace_back(m.token, &m);
      std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [tok, ptr] : items) {
        bool is_class = std::any_of(prog.classes.begin(), prog.classes.end(),
                                    [&](const mj::Class& c) { return &c == ptr; });
        if (is_class)
          emit_class(*static_cast<const mj::Class*>(ptr));
        else
          emit_method(*static_cast<const mj::Method*>(ptr));
      }
    }
    for (const auto& [name, id] : class_ids_)
      if (!emitted_classes_.count(name)) emit_synthetic_class(name, id);
  }

  Database database() {
    std::vector<Relation> rels;
    for (int r = 0; r < schema_.size(); ++r) {
      Relation rel{schema_.relation(r).name, {}};
      for (auto& vals : rows_[r]) {
        Tuple t;
        const auto& decl = schema_.relation(r);
        for (int a = 0; a < decl.arity(); ++a)
          t.push_back(decl.attributes[a].kind == AttrKind::String ? Value::str(vals[a]) : Value::entity(vals[a]));
        rel.tuples.push_back(std::move(t));
      }
      rels.push_back(std::move(rel));
    }
    return Database(schema_, std::move(rels));
  }

  std::set<std::string> finish_marks() {
    std::set<std::string> positives;
    for (size_t pi = 0; pi < progs_.size(); ++pi) {
      const auto& toks = progs_[pi]->tokens;
      for (size_t t = 0; t < toks.size(); ++t) {
        if (toks[t].mark == mj::Mark::None) continue;
        auto where = std::to_string(toks[t].pos.line) + ":" + std::to_string(toks[t].pos.col);
        if (toks[t].mark == mj::Mark::Both)
          throw PartitionError("construct at " + where + " is marked both @pos and @neg");
        auto it = consumed_.find({static_cast<int>(pi), static_cast<int>(t)});
        if (it == consumed_.end())
          throw ExtractError("annotation at " + where + " is not on a " + target_ + " construct");
        if (toks[t].mark == mj::Mark::Pos) positives.insert(it->second);
      }
    }
    if (positives.empty()) throw ExtractError("no @pos annotation on a " + target_ + " construct");
    return positives;
  }

  std::map<std::string, std::string> positions;

private:
  std::string next_id(const std::string& rel) {
    int r = schema_.index_of(rel);
    return prefix_for(rel) + std::to_string(++counters_[r]);
  }

  std::string add(const std::string& rel, std::vector<std::string> vals, int token) {
    return add_with_id(rel, next_id(rel), std::move(vals), token);
  }

  std::string add_with_id(const std::string& rel, const std::string& id, std::vector<std::string> vals, int token) {
    int r = schema_.index_of(rel);
    vals.insert(vals.begin(), id);
    rows_[r].push_back(std::move(vals));
    if (token >= 0) {
      const auto& t = progs_[prog_]->tokens[token];
      positions[id] = (prog_ < static_cast<int>(labels_.size()) ? labels_[prog_] + ":" : std::string()) +
                      std::to_string(t.pos.line) + ":" + std::to_string(t.pos.col);
      // The outermost construct starting at an annotated token takes the annotation.
      if (rel == target_ && t.mark != mj::Mark::None && !consumed_.count({prog_, token}))
        consumed_[{prog_, token}] = id;
    }
    return id;
  }

  std::string intern(const std::string& rel, const std::string& name) {
    auto& m = interned_[rel];
    auto it = m.find(name);
    if (it != m.end()) return it->second;
    auto id = add(rel, {name}, -1);
    m[name] = id;
    return id;
  }

  std::string object_class() {
    if (!class_ids_.count("Object")) class_ids_["Object"] = next_id("Class");
    return class_ids_["Object"];
  }

  void emit_class(const mj::Class& c) {
    if (emitted_classes_.count(c.name)) throw ExtractError("class " + c.name + " declared twice");
    emitted_classes_.insert(c.name);
    std::string super;
    if (c.is_interface || c.super.empty()) {
      super = object_class();
    } else {
      if (!class_ids_.count(c.super)) class_ids_[c.super] = next_id("Class");
      super = class_ids_[c.super];
    }
    auto id = class_ids_.at(c.name);
    add_with_id("Class", id,
                {intern("Identifier", c.name), intern("Modifier", modifier_text(c.modifiers)), super,
                 c.is_interface ? "interface" : "class"},
                c.token);
    for (const auto& f : c.fields)
      add("Field",
          {intern("Identifier", f.name), intern("Type", f.type), intern("Modifier", modifier_text(f.modifiers)), id},
          f.token);
    for (const auto& m : c.methods) emit_method(m);
  }

  void emit_synthetic_class(const std::string& name, const std::string& id) {
    emitted_classes_.insert(name);
    std::string super = name == "Object" ? id : object_class();
    add_with_id("Class", id, {intern("Identifier", name), intern("Modifier", ""), super, "external"}, -1);
    if (name != "Object" && !emitted_classes_.count("Object")) emit_synthetic_class("Object", object_class());
  }

  void emit_method(const mj::Method& m) {
    auto id = add("Method",
                  {intern("Identifier", m.name), intern("Type", m.ret_type), intern("Modifier", modifier_text(m.modifiers))},
                  m.token);
    for (const auto& p : m.params) add("Parameter", {intern("Identifier", p.name), intern("Type", p.type), id}, p.token);
    method_ = id;
    for (const auto& s : m.body) emit_stmt(*s);
    method_.clear();
  }

  void emit_locals(const std::vector<mj::LocalDecl>& locals) {
    for (const auto& d : locals) {
      add("LocalVar", {intern("Identifier", d.name), intern("Type", d.type), method_}, d.token);
      if (d.init) emit_expr(*d.init);
    }
  }

  void emit_stmt(const mj::Stmt& s) {
    switch (s.kind) {
      case mj::Stmt::If: {
        auto cond = emit_expr(s.exprs.at(0));
        add("IfStmt", {method_, cond}, s.token);
        for (const auto& b : s.body) emit_stmt(*b);
        break;
      }
      case mj::Stmt::For:
        emit_locals(s.locals);
        for (const auto& e : s.exprs) emit_expr(e);
        for (const auto& b : s.body) emit_stmt(*b);
        break;
      case mj::Stmt::Local:
        emit_locals(s.locals);
        break;
      default:
        for (const auto& e : s.exprs) emit_expr(e);
        for (const auto& b : s.body) emit_stmt(*b);
        break;
    }
  }

  std::string emit_expr(const mj::Expr& e) {
    auto id = add("Expr", {e.kind, method_}, e.token);
    if (!e.callee.empty()) add("Call", {method_, intern("Identifier", e.callee)}, e.token);
    for (const auto& c : e.children) emit_expr(c);
    return id;
  }

  const Schema& schema_;
  std::vector<const mj::Program*> progs_;
  std::string target_;
  std::vector<std::string> labels_;
  int prog_ = 0;
  std::string method_;
  std::vector<std::vector<std::vector<std::string>>> rows_;
  std::vector<int> counters_;
  std::map<std::string, std::map<std::string, std::string>> interned_;
  std::map<std::string, std::string> class_ids_;
  std::set<std::string> emitted_classes_;
  std::map<std::pair<int, int>, std::string> consumed_;
};

}  // namespace

const Schema& extraction_schema() {
  static const Schema schema = make_schema();
  return schema;
}

namespace {

std::vector<const mj::Program*> pointers(const std::vector<mj::Program>& progs) {
  std::vector<const mj::Program*> out;
  for (const auto& p : progs) out.push_back(&p);
  return out;
}

Extraction run_extract(const std::vector<const mj::Program*>& progs, const std::string& target,
                       const std::vector<std::string>& labels) {
  if (extraction_schema().index_of(target) < 0) throw ExtractError("unknown target relation '" + target + "'");
  Builder b(progs, target, labels);
  b.run();
  auto positives = b.finish_marks();
  Extraction out{b.database(), {}, b.positions};
  out.part = make_partition(target, positives, out.db);
  return out;
}

}  // namespace

Extraction extract(const mj::Program& prog, const std::string& target) { return run_extract({&prog}, target, {}); }

Extraction extract(const std::vector<mj::Program>& progs, const std::string& target,
                   const std::vector<std::string>& labels) {
  return run_extract(pointers(progs), target, labels);
}

Extraction extract_source(const std::string& source, const std::string& target) {
  return extract(mj::parse(source), target);
}

Database extract_facts(const mj::Program& prog, std::map<std::string, std::string>* positions) {
  Builder b({&prog}, "");
  b.run();
  if (positions) *positions = b.positions;
  return b.database();
}

Database extract_facts(const std::vector<mj::Program>& progs, std::map<std::string, std::string>* positions,
                       const std::vector<std::string>& labels) {
  Builder b(pointers(progs), "", labels);
  b.run();
  if (positions) *positions = b.positions;
  return b.database();
}

}  // namespace cqs
