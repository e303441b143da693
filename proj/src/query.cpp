#include "cqs/query.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace cqs {

using nlohmann::json;

const char* to_string(StrPred p) {
  switch (p) {
    case StrPred::Equal: return "equal";
    case StrPred::Prefix: return "prefix";
    case StrPred::Suffix: return "suffix";
    case StrPred::Contain: return "contain";
  }
  return "?";
}

StrPred parse_pred(const std::string& s) {
  if (s == "equal") return StrPred::Equal;
  if (s == "prefix") return StrPred::Prefix;
  if (s == "suffix") return StrPred::Suffix;
  if (s == "contain") return StrPred::Contain;
  throw ParseError("unknown string predicate '" + s + "'");
}

// Byte-level matching coincides with code point matching on valid UTF-8.
bool holds(StrPred p, const std::string& v, const std::string& lit) {
  switch (p) {
    case StrPred::Equal: return v == lit;
    case StrPred::Prefix: return v.size() >= lit.size() && v.compare(0, lit.size(), lit) == 0;
    case StrPred::Suffix: return v.size() >= lit.size() && v.compare(v.size() - lit.size(), lit.size(), lit) == 0;
    case StrPred::Contain: return v.find(lit) != std::string::npos;
  }
  return false;
}

int strength(StrPred p) {
  switch (p) {
    case StrPred::Equal: return 3;
    case StrPred::Prefix:
    case StrPred::Suffix: return 2;
    case StrPred::Contain: return 1;
  }
  return 0;
}

const StrConstraint* QueryGraph::constraint_at(int node, int attr) const {
  for (const auto& s : strs)
    if (s.node == node && s.attr == attr) return &s;
  return nullptr;
}

std::string alias_name(int node) { return "A" + std::to_string(node + 1); }

void check_graph(const QueryGraph& g, const Schema& schema) {
  const int m = g.size();
  for (int r : g.nodes)
    if (r < 0 || r >= schema.size()) throw GraphError("node with unknown relation");
  for (const auto& e : g.eqs) {
    if (e.from < 0 || e.from >= m || e.to < 0 || e.to >= m) throw GraphError("edge endpoint out of range");
    const auto& rel = schema.relation(g.nodes[e.from]);
    if (e.attr < 0 || e.attr >= rel.arity() || rel.attributes[e.attr].kind != AttrKind::ForeignKey)
      throw GraphError("edge label is not a foreign key of " + rel.name);
    if (schema.fk_target(g.nodes[e.from], e.attr) != g.nodes[e.to])
      throw GraphError(rel.name + "." + rel.attributes[e.attr].name + " does not reference " +
                       schema.relation(g.nodes[e.to]).name);
  }
  std::set<std::pair<int, int>> slots;
  for (const auto& s : g.strs) {
    if (s.node < 0 || s.node >= m) throw GraphError("string constraint on unknown node");
    const auto& rel = schema.relation(g.nodes[s.node]);
    if (s.attr < 0 || s.attr >= rel.arity() || rel.attributes[s.attr].kind != AttrKind::String)
      throw GraphError("string constraint on a non-string attribute of " + rel.name);
    if (!slots.emplace(s.node, s.attr).second)
      throw GraphError("two string constraints on " + alias_name(s.node) + "." + rel.attributes[s.attr].name);
  }
}

bool is_connected(const QueryGraph& g) {
  const int m = g.size();
  if (m == 0) return true;
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.eqs) parent[find(e.from)] = find(e.to);
  for (int i = 1; i < m; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

QueryGraph to_graph(const ConjunctiveQuery& q, const Schema& schema) {
  if (q.product.empty()) throw GraphError("empty product");
  if (q.product.front().first != q.head_alias) throw GraphError("head alias must come first in the product");
  QueryGraph g;
  std::map<std::string, int> alias;
  for (const auto& [a, rel] : q.product) {
    int r = schema.index_of(rel);
    if (r < 0) throw GraphError("unknown relation '" + rel + "'");
    if (!alias.emplace(a, g.size()).second) throw GraphError("duplicate alias '" + a + "'");
    g.nodes.push_back(r);
  }
  auto node_of = [&](const std::string& a) {
    auto it = alias.find(a);
    if (it == alias.end()) throw GraphError("unknown alias '" + a + "'");
    return it->second;
  };
  for (const auto& c : q.condition) {
    if (const auto* eq = std::get_if<Equality>(&c)) {
      int from = node_of(eq->fk_alias);
      int to = node_of(eq->pk_alias);
      int attr = schema.relation(g.nodes[from]).attr_index(eq->fk_attr);
      if (attr < 0) throw GraphError("unknown attribute " + eq->fk_alias + "." + eq->fk_attr);
      g.eqs.push_back({from, attr, to});
    } else {
      const auto& s = std::get<StringCondition>(c);
      int node = node_of(s.alias);
      int attr = schema.relation(g.nodes[node]).attr_index(s.attr);
      if (attr < 0) throw GraphError("unknown attribute " + s.alias + "." + s.attr);
      g.strs.push_back({node, attr, s.pred, s.literal});
    }
  }
  check_graph(g, schema);
  return g;
}

ConjunctiveQuery from_graph(const QueryGraph& g, const Schema& schema) {
  ConjunctiveQuery q;
  q.head_alias = alias_name(0);
  for (int i = 0; i < g.size(); ++i) q.product.emplace_back(alias_name(i), schema.relation(g.nodes[i]).name);
  for (const auto& e : g.eqs)
    q.condition.push_back(
        Equality{alias_name(e.to), alias_name(e.from), schema.relation(g.nodes[e.from]).attributes[e.attr].name});
  for (const auto& s : g.strs)
    q.condition.push_back(StringCondition{alias_name(s.node), schema.relation(g.nodes[s.node]).attributes[s.attr].name,
                                          s.pred, s.literal});
  return q;
}

int multiplicity(const QueryGraph& g, int relation) {
  return static_cast<int>(std::count(g.nodes.begin(), g.nodes.end(), relation));
}

int multiplicity(const QueryGraph& g, const Schema& schema, const std::string& relation) {
  int r = schema.index_of(relation);
  return r < 0 ? 0 : multiplicity(g, r);
}

int max_multiplicity(const QueryGraph& g) {
  std::map<int, int> c;
  int best = 0;
  for (int r : g.nodes) best = std::max(best, ++c[r]);
  return best;
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

// Ranks strings so equal strings share a rank and ranks follow string order.
std::vector<int> rank_strings(const std::vector<std::string>& sig) {
  std::vector<std::string> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  for (const auto& s : sig)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()));
  return out;
}

std::string serialize(const QueryGraph& g, const Schema& schema, const std::vector<int>& order) {
  // order[pos] = node placed at that position
  const int m = g.size();
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  std::ostringstream os;
  for (int i = 0; i < m; ++i) os << schema.relation(g.nodes[order[i]]).name << ",";
  std::vector<std::tuple<int, std::string, int>> edges;
  for (const auto& e : g.eqs)
    edges.emplace_back(pos[e.from], schema.relation(g.nodes[e.from]).attributes[e.attr].name, pos[e.to]);
  std::sort(edges.begin(), edges.end());
  os << "|";
  for (const auto& [f, l, t] : edges) os << f << "." << l << ">" << t << ";";
  std::vector<std::tuple<int, std::string, std::string>> strs;
  for (const auto& s : g.strs)
    strs.emplace_back(pos[s.node], schema.relation(g.nodes[s.node]).attributes[s.attr].name,
                      std::string(to_string(s.pred)) + ":" + quoted(s.literal));
  std::sort(strs.begin(), strs.end());
  os << "|";
  for (const auto& [n, a, c] : strs) os << n << "." << a << "~" << c << ";";
  return os.str();
}

}  // namespace

std::string canonical_form(const QueryGraph& g, const Schema& schema) {
  const int m = g.size();
  if (m == 0) return "";
  std::vector<std::string> sig(m);
  for (int i = 0; i < m; ++i) {
    std::vector<std::string> local;
    for (const auto& s : g.strs)
      if (s.node == i)
        local.push_back(schema.relation(g.nodes[i]).attributes[s.attr].name + ":" + to_string(s.pred) + ":" +
                        quoted(s.literal));
    std::sort(local.begin(), local.end());
    std::string x = (i == 0 ? "H:" : "N:") + schema.relation(g.nodes[i]).name;
    for (const auto& l : local) x += "," + l;
    sig[i] = x;
  }
  auto colour = rank_strings(sig);
  int classes = *std::max_element(colour.begin(), colour.end()) + 1;
  for (int iter = 0; iter < m; ++iter) {
    std::vector<std::vector<std::string>> nb(m);
    for (const auto& e : g.eqs) {
      const auto& label = schema.relation(g.nodes[e.from]).attributes[e.attr].name;
      nb[e.from].push_back(">" + label + ":" + std::to_string(colour[e.to]));
      nb[e.to].push_back("<" + label + ":" + std::to_string(colour[e.from]));
    }
    std::vector<std::string> next(m);
    for (int i = 0; i < m; ++i) {
      std::sort(nb[i].begin(), nb[i].end());
      next[i] = std::to_string(colour[i]);
      for (const auto& s : nb[i]) next[i] += "," + s;
    }
    auto refined = rank_strings(next);
    // Ranks are compared as strings, so keep the old colour as the leading key.
    std::vector<std::string> keyed(m);
    for (int i = 0; i < m; ++i) {
      char buf[32];
      snprintf(buf, sizeof buf, "%08d:%08d", colour[i], refined[i]);
      keyed[i] = buf;
    }
    auto c2 = rank_strings(keyed);
    int n2 = *std::max_element(c2.begin(), c2.end()) + 1;
    colour = c2;
    if (n2 == classes) break;
    classes = n2;
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  // Try every arrangement inside each colour class and keep the smallest text.
  std::vector<std::pair<int, int>> ranges;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && colour[order[j]] == colour[order[i]]) ++j;
    if (j - i > 1) ranges.emplace_back(i, j);
    i = j;
  }
  std::string best = serialize(g, schema, order);
  auto rec = [&](auto&& self, size_t ri) -> void {
    if (ri == ranges.size()) {
      auto s = serialize(g, schema, order);
      if (s < best) best = s;
      return;
    }
    auto [lo, hi] = ranges[ri];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, ri + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(rec, 0);
  return best;
}

int complexity(const QueryGraph& g) {
  return g.size() + static_cast<int>(g.eqs.size()) + static_cast<int>(g.strs.size());
}

int complexity(const ConjunctiveQuery& q) {
  return static_cast<int>(q.product.size()) + static_cast<int>(q.condition.size());
}

GraphCounts counts(const QueryGraph& g) {
  return {g.size(), static_cast<int>(g.eqs.size()), static_cast<int>(g.strs.size())};
}

std::string render_ra(const ConjunctiveQuery& q) {
  std::ostringstream os;
  std::vector<std::string> atoms;
  std::map<std::string, int> order;
  for (size_t i = 0; i < q.product.size(); ++i) order[q.product[i].first] = static_cast<int>(i);
  std::vector<std::tuple<int, int, std::string>> eqs;
  for (const auto& c : q.condition) {
    if (const auto* e = std::get_if<Equality>(&c)) {
      int a = order.count(e->pk_alias) ? order[e->pk_alias] : 0;
      int b = order.count(e->fk_alias) ? order[e->fk_alias] : 0;
      std::string text = a <= b ? "(" + e->pk_alias + ".id = " + e->fk_alias + "." + e->fk_attr + ")"
                                : "(" + e->fk_alias + "." + e->fk_attr + " = " + e->pk_alias + ".id)";
      eqs.emplace_back(std::min(a, b), std::max(a, b), text);
    }
  }
  std::sort(eqs.begin(), eqs.end());
  for (const auto& e : eqs) atoms.push_back(std::get<2>(e));
  for (const auto& c : q.condition)
    if (const auto* s = std::get_if<StringCondition>(&c))
      atoms.push_back(std::string(to_string(s->pred)) + "(" + s->alias + "." + s->attr + ", " + quoted(s->literal) +
                      ")");
  os << "Π_(" << q.head_alias << ".*)(σ_{";
  if (atoms.empty()) os << "true";
  for (size_t i = 0; i < atoms.size(); ++i) os << (i ? " ∧ " : "") << atoms[i];
  os << "}(";
  for (size_t i = 0; i < q.product.size(); ++i)
    os << (i ? " × " : "") << "ρ_" << q.product[i].first << "(" << q.product[i].second << ")";
  os << "))";
  return os.str();
}

std::string render_ra(const QueryGraph& g, const Schema& schema) { return render_ra(from_graph(g, schema)); }

std::string render_datalog(const QueryGraph& g, const Schema& schema) {
  const int m = g.size();
  std::vector<int> base(m + 1, 0);
  for (int i = 0; i < m; ++i) base[i + 1] = base[i] + schema.relation(g.nodes[i]).arity();
  const int slots = base[m];
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.eqs) {
    int a = find(base[e.from] + e.attr), b = find(base[e.to]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> members(slots, 0);
  for (int s = 0; s < slots; ++s) ++members[find(s)];
  std::vector<char> constrained(slots, 0);
  for (const auto& s : g.strs) constrained[find(base[s.node] + s.attr)] = 1;

  std::map<int, std::string> name;
  const int head_arity = m ? schema.relation(g.nodes[0]).arity() : 0;
  for (int a = 0; a < head_arity; ++a) {
    int c = find(a);
    if (!name.count(c)) name[c] = "X" + std::to_string(a + 1);
  }
  int next_var = 1;
  auto var = [&](int slot) -> std::string {
    int c = find(slot);
    auto it = name.find(c);
    if (it != name.end()) return it->second;
    if (members[c] == 1 && !constrained[c]) return "_";
    return name[c] = "V" + std::to_string(next_var++);
  };

  std::ostringstream os;
  os << "out(";
  for (int a = 0; a < head_arity; ++a) os << (a ? ", " : "") << var(a);
  os << ") :- ";
  for (int i = 0; i < m; ++i) {
    const auto& rel = schema.relation(g.nodes[i]);
    os << (i ? ", " : "") << rel.name << "(";
    for (int a = 0; a < rel.arity(); ++a) os << (a ? ", " : "") << var(base[i] + a);
    os << ")";
  }
  auto strs = g.strs;
  std::sort(strs.begin(), strs.end(),
            [](const auto& x, const auto& y) { return std::tie(x.node, x.attr) < std::tie(y.node, y.attr); });
  for (const auto& s : strs)
    os << ", str_" << to_string(s.pred) << "(" << var(base[s.node] + s.attr) << ", " << quoted(s.literal) << ")";
  os << ".";
  return os.str();
}

namespace {

struct Token {
  enum Kind { Ident, Str, LParen, RParen, Comma, Turnstile, Dot, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex_rule(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) { ++i; continue; }
    if (c == '%') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      while (j < s.size() && s[j] != '"') j += s[j] == '\\' ? 2 : 1;
      if (j >= s.size()) throw ParseError("unterminated string literal at offset " + std::to_string(i));
      std::string lit;
      try {
        lit = json::parse(s.substr(i, j - i + 1)).get<std::string>();
      } catch (const json::exception&) {
        throw ParseError("bad string literal at offset " + std::to_string(i));
      }
      out.push_back({Token::Str, lit, i});
      i = j + 1;
      continue;
    }
    if (c == ':' && i + 1 < s.size() && s[i + 1] == '-') {
      out.push_back({Token::Turnstile, ":-", i});
      i += 2;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case ',': k = Token::Comma; break;
      case '.': k = Token::Dot; break;
      default: throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "' at offset " +
                                std::to_string(i));
    }
    out.push_back({k, std::string(1, static_cast<char>(c)), i});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

struct Atom {
  std::string name;
  std::vector<Token> args;
};

}  // namespace

QueryGraph parse_datalog(const std::string& text, const Schema& schema) {
  auto toks = lex_rule(text);
  size_t p = 0;
  auto expect = [&](Token::Kind k, const char* what) {
    if (toks[p].kind != k) throw ParseError(std::string("expected ") + what + " at offset " + std::to_string(toks[p].pos));
    return toks[p++];
  };
  auto atom = [&]() {
    Atom a;
    a.name = expect(Token::Ident, "predicate name").text;
    expect(Token::LParen, "'('");
    if (toks[p].kind != Token::RParen) {
      while (true) {
        if (toks[p].kind != Token::Ident && toks[p].kind != Token::Str)
          throw ParseError("expected argument at offset " + std::to_string(toks[p].pos));
        a.args.push_back(toks[p++]);
        if (toks[p].kind == Token::Comma) { ++p; continue; }
        break;
      }
    }
    expect(Token::RParen, "')'");
    return a;
  };
  Atom head = atom();
  expect(Token::Turnstile, "':-'");
  std::vector<Atom> body;
  body.push_back(atom());
  while (toks[p].kind == Token::Comma) {
    ++p;
    body.push_back(atom());
  }
  expect(Token::Dot, "'.'");
  expect(Token::End, "end of rule");

  QueryGraph g;
  std::map<std::string, std::vector<std::pair<int, int>>> occ;  // variable -> (node, attr)
  std::vector<std::tuple<std::string, StrPred, std::string>> str_atoms;
  for (const auto& a : body) {
    if (a.name.rfind("str_", 0) == 0) {
      StrPred pred = parse_pred(a.name.substr(4));
      if (a.args.size() != 2 || a.args[0].kind != Token::Ident || a.args[1].kind != Token::Str)
        throw ParseError(a.name + " takes a variable and a string literal");
      str_atoms.emplace_back(a.args[0].text, pred, a.args[1].text);
      continue;
    }
    int r = schema.index_of(a.name);
    if (r < 0) throw ParseError("unknown relation '" + a.name + "'");
    const auto& rel = schema.relation(r);
    if (static_cast<int>(a.args.size()) != rel.arity())
      throw ParseError(a.name + " expects " + std::to_string(rel.arity()) + " arguments");
    int node = g.size();
    g.nodes.push_back(r);
    for (int i = 0; i < rel.arity(); ++i) {
      if (a.args[i].kind != Token::Ident) throw ParseError("relation arguments must be variables");
      if (a.args[i].text != "_") occ[a.args[i].text].emplace_back(node, i);
    }
  }
  if (g.empty()) throw ParseError("rule has no relation atom");
  const auto& head_rel = schema.relation(g.nodes[0]);
  const auto& first = body[0];
  if (head.args.size() != first.args.size())
    throw ParseError("head arity differs from the first body atom");
  for (size_t i = 0; i < head.args.size(); ++i)
    if (head.args[i].kind != Token::Ident || head.args[i].text != first.args[i].text || head.args[i].text == "_")
      throw ParseError("head arguments must repeat the variables of the " + head_rel.name + " atom");

  for (const auto& [v, slots] : occ) {
    std::vector<std::pair<int, int>> pks, fks, strs;
    for (auto [n, a] : slots) {
      auto kind = schema.relation(g.nodes[n]).attributes[a].kind;
      (kind == AttrKind::PrimaryKey ? pks : kind == AttrKind::ForeignKey ? fks : strs).emplace_back(n, a);
    }
    if (!strs.empty()) {
      if (slots.size() > 1) throw ParseError("string variable " + v + " cannot be shared");
      continue;
    }
    if (slots.size() == 1) continue;
    if (pks.empty()) throw ParseError("variable " + v + " equates foreign keys without a primary key");
    if (fks.empty()) throw ParseError("variable " + v + " equates primary keys without a foreign key");
    for (auto [pn, pa] : pks)
      for (auto [fn, fa] : fks) g.eqs.push_back({fn, fa, pn});
  }
  for (const auto& [v, pred, lit] : str_atoms) {
    auto it = occ.find(v);
    if (it == occ.end()) throw ParseError("string predicate on unbound variable " + v);
    auto [n, a] = it->second[0];
    if (schema.relation(g.nodes[n]).attributes[a].kind != AttrKind::String)
      throw ParseError("string predicate on non-string variable " + v);
    g.strs.push_back({n, a, pred, lit});
  }
  std::sort(g.eqs.begin(), g.eqs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.attr, x.to) < std::tie(y.from, y.attr, y.to);
  });
  try {
    check_graph(g, schema);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string render_dot(const QueryGraph& g, const Schema& schema) {
  std::ostringstream os;
  os << "digraph query {\n";
  for (int i = 0; i < g.size(); ++i)
    os << "  n" << i << " [label=\"" << schema.relation(g.nodes[i]).name << ", " << alias_name(i) << "\"];\n";
  for (size_t k = 0; k < g.strs.size(); ++k) {
    const auto& s = g.strs[k];
    std::string lit = quoted(s.literal);
    std::string esc;
    for (char c : lit) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    os << "  s" << k << " [shape=box, style=filled, fillcolor=gray, label=\"" << to_string(s.pred) << ", " << esc
       << "\"];\n";
  }
  for (const auto& e : g.eqs)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << schema.relation(g.nodes[e.from]).attributes[e.attr].name
       << "\"];\n";
  for (size_t k = 0; k < g.strs.size(); ++k) {
    const auto& s = g.strs[k];
    os << "  n" << s.node << " -> s" << k << " [label=\"" << schema.relation(g.nodes[s.node]).attributes[s.attr].name
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json query_to_json(const QueryGraph& g, const Schema& schema) {
  json nodes = json::array();
  for (int i = 0; i < g.size(); ++i) nodes.push_back({{"alias", alias_name(i)}, {"relation", schema.relation(g.nodes[i]).name}});
  json eqs = json::array();
  for (const auto& e : g.eqs)
    eqs.push_back({{"from", alias_name(e.from)},
                   {"attr", schema.relation(g.nodes[e.from]).attributes[e.attr].name},
                   {"to", alias_name(e.to)}});
  json strs = json::array();
  for (const auto& s : g.strs)
    strs.push_back({{"alias", alias_name(s.node)},
                    {"attr", schema.relation(g.nodes[s.node]).attributes[s.attr].name},
                    {"pred", to_string(s.pred)},
                    {"literal", s.literal}});
  return {{"nodes", nodes}, {"equalities", eqs}, {"strings", strs}};
}

}  // namespace cqs
