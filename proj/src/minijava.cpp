#include "cqs/minijava.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cqs/relational.hpp"

namespace cqs::mj {

namespace {

const std::set<std::string> kKeywords = {
    "class",    "interface", "extends", "implements", "public",       "private", "protected",
    "static",   "final",     "abstract", "synchronized", "native",    "transient", "volatile",
    "if",       "else",      "for",     "while",      "return",       "new",     "true",
    "false",    "null",      "import",  "package"};

const std::set<std::string> kModifiers = {"public", "private", "protected", "static", "final", "abstract",
                                          "synchronized", "native", "transient", "volatile"};

const std::set<std::string> kPrimitives = {"boolean", "byte", "char", "short", "int", "long", "float", "double"};

const char* kOps[] = {"==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=",
                      "+",  "-",  "*",  "/",  "%",  "<",  ">",  "!",  "=",  "(",  ")",  "{",  "}",
                      "[",  "]",  ";",  ",",  ".",  "?",  ":",  "&",  "|",  "^",  "~",  "@"};

[[noreturn]] void fail(const Pos& pos, const std::string& msg) {
  throw ParseError(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg);
}

}  // namespace

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  Pos pos;
  Mark pending = Mark::None;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
    }
  };
  auto emit = [&](Token::Kind kind, std::string text, Pos at) {
    out.push_back({kind, std::move(text), at, pending});
    pending = Mark::None;
  };
  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      Pos at = pos;
      size_t end = src.find("*/", i + 2);
      if (end == std::string::npos) fail(at, "unterminated comment");
      std::string body = src.substr(i + 2, end - i - 2);
      size_t a = body.find_first_not_of(" \t\r\n");
      size_t b = body.find_last_not_of(" \t\r\n");
      std::string trimmed = a == std::string::npos ? "" : body.substr(a, b - a + 1);
      if (trimmed == "@pos" || trimmed == "@neg") {
        Mark m = trimmed == "@pos" ? Mark::Pos : Mark::Neg;
        pending = (pending == Mark::None || pending == m) ? m : Mark::Both;
      }
      advance(end + 2 - i);
      continue;
    }
    Pos at = pos;
    if (std::isalpha(c) || c == '_' || c == '$') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '$')) ++j;
      std::string word = src.substr(i, j - i);
      advance(j - i);
      emit(kKeywords.count(word) ? Token::Keyword : Token::Ident, word, at);
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      size_t j = i;
      bool is_float = false;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '.' ||
                                ((src[j] == '+' || src[j] == '-') && (src[j - 1] == 'e' || src[j - 1] == 'E')))) {
        if (src[j] == '.' || src[j] == 'e' || src[j] == 'E') is_float = true;
        ++j;
      }
      std::string num = src.substr(i, j - i);
      char last = static_cast<char>(std::tolower(static_cast<unsigned char>(num.back())));
      if ((last == 'f' || last == 'd') && num.rfind("0x", 0) != 0) is_float = true;
      advance(j - i);
      emit(is_float ? Token::Float : Token::Int, num, at);
      continue;
    }
    if (c == '"' || c == '\'') {
      size_t j = i + 1;
      while (j < src.size() && src[j] != static_cast<char>(c) && src[j] != '\n') j += src[j] == '\\' ? 2 : 1;
      if (j >= src.size() || src[j] != static_cast<char>(c)) fail(at, "unterminated literal");
      std::string text = src.substr(i + 1, j - i - 1);
      advance(j + 1 - i);
      emit(c == '"' ? Token::String : Token::Char, text, at);
      continue;
    }
    bool matched = false;
    for (const char* op : kOps) {
      std::string o(op);
      if (src.compare(i, o.size(), o) == 0) {
        advance(o.size());
        emit(Token::Op, o, at);
        matched = true;
        break;
      }
    }
    if (!matched) fail(at, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  out.push_back({Token::End, "", pos, pending});
  return out;
}

namespace {

class Parser {
public:
  explicit Parser(std::vector<Token> toks) { prog_.tokens = std::move(toks); }

  Program run() {
    if (is_kw("package")) {
      ++p_;
      prog_.package = qualified();
      expect(";");
    }
    while (is_kw("import")) {
      Import imp;
      imp.token = p_++;
      imp.name = qualified(true);
      expect(";");
      prog_.imports.push_back(std::move(imp));
    }
    while (!at_end()) {
      int start = p_;
      auto mods = modifiers();
      if (is_kw("class") || is_kw("interface")) {
        prog_.classes.push_back(class_decl(start, std::move(mods)));
      } else {
        prog_.methods.push_back(method_rest(start, std::move(mods), true));
      }
    }
    return std::move(prog_);
  }

private:
  const Token& tok(int off = 0) const {
    size_t k = std::min(prog_.tokens.size() - 1, static_cast<size_t>(p_ + off));
    return prog_.tokens[k];
  }
  bool at_end() const { return tok().kind == Token::End; }
  bool is_op(const char* o, int off = 0) const { return tok(off).kind == Token::Op && tok(off).text == o; }
  bool is_kw(const char* k, int off = 0) const { return tok(off).kind == Token::Keyword && tok(off).text == k; }
  bool is_ident(int off = 0) const { return tok(off).kind == Token::Ident; }

  [[noreturn]] void error(const std::string& msg) const {
    std::string got = at_end() ? "end of input" : "'" + tok().text + "'";
    fail(tok().pos, msg + ", got " + got);
  }
  void expect(const char* o) {
    if (!is_op(o)) error(std::string("expected '") + o + "'");
    ++p_;
  }
  std::string ident() {
    if (!is_ident()) error("expected identifier");
    return prog_.tokens[p_++].text;
  }

  std::string qualified(bool allow_star = false) {
    std::string name = ident();
    while (is_op(".")) {
      ++p_;
      if (allow_star && is_op("*")) {
        ++p_;
        name += ".*";
        break;
      }
      name += "." + ident();
    }
    return name;
  }

  std::vector<std::string> modifiers() {
    std::vector<std::string> mods;
    while (tok().kind == Token::Keyword && kModifiers.count(tok().text)) mods.push_back(prog_.tokens[p_++].text);
    if (is_op("@")) error("annotations are not supported");
    return mods;
  }

  std::string type() {
    std::string t = qualified();
    if (is_op("<")) error("generic types are not supported");
    while (is_op("[") && is_op("]", 1)) {
      p_ += 2;
      t += "[]";
    }
    return t;
  }

  // Whether a type followed by an identifier starts here.
  bool looks_like_decl() const {
    int k = 0;
    if (tok(k).kind != Token::Ident) return false;
    ++k;
    while (tok(k).kind == Token::Op && tok(k).text == "." && tok(k + 1).kind == Token::Ident) k += 2;
    while (tok(k).kind == Token::Op && tok(k).text == "[" && tok(k + 1).kind == Token::Op && tok(k + 1).text == "]")
      k += 2;
    return tok(k).kind == Token::Ident;
  }

  Class class_decl(int start, std::vector<std::string> mods) {
    Class c;
    c.token = start;
    c.modifiers = std::move(mods);
    c.is_interface = tok().text == "interface";
    ++p_;
    c.name = ident();
    if (is_op("<")) error("generic types are not supported");
    if (is_kw("extends")) {
      ++p_;
      c.super = type();
      if (c.is_interface) {
        c.interfaces.push_back(c.super);
        c.super.clear();
        while (is_op(",")) {
          ++p_;
          c.interfaces.push_back(type());
        }
      }
    }
    if (is_kw("implements")) {
      ++p_;
      c.interfaces.push_back(type());
      while (is_op(",")) {
        ++p_;
        c.interfaces.push_back(type());
      }
    }
    expect("{");
    while (!is_op("}")) {
      if (at_end()) error("expected '}'");
      int mstart = p_;
      auto mmods = modifiers();
      if (is_kw("class") || is_kw("interface")) error("nested classes are not supported");
      if (is_ident() && is_op("(", 1)) error("constructors are not supported");
      int tstart = p_;
      std::string t = type();
      std::string name = ident();
      if (is_op("(")) {
        p_ = tstart;
        c.methods.push_back(method_rest(mstart, std::move(mmods), false));
        continue;
      }
      bool first = true;
      while (true) {
        Field f;
        f.modifiers = mmods;
        f.type = t;
        f.token = first ? mstart : p_ - 1;
        f.name = name;
        if (is_op("=")) {
          ++p_;
          f.init = std::make_unique<Expr>(expr());
        }
        c.fields.push_back(std::move(f));
        first = false;
        if (!is_op(",")) break;
        ++p_;
        name = ident();
      }
      expect(";");
    }
    expect("}");
    return c;
  }

  Method method_rest(int start, std::vector<std::string> mods, bool top_level) {
    Method m;
    m.token = start;
    m.modifiers = std::move(mods);
    if (top_level && is_ident() && is_op("(", 1)) error("constructors are not supported");
    m.ret_type = type();
    m.name = ident();
    expect("(");
    if (!is_op(")")) {
      while (true) {
        Param prm;
        prm.token = p_;
        while (is_kw("final")) ++p_;
        prm.type = type();
        prm.name = ident();
        m.params.push_back(std::move(prm));
        if (!is_op(",")) break;
        ++p_;
      }
    }
    expect(")");
    if (is_op(";")) {
      ++p_;
      return m;
    }
    expect("{");
    while (!is_op("}")) {
      if (at_end()) error("expected '}'");
      m.body.push_back(stmt());
    }
    expect("}");
    return m;
  }

  std::vector<LocalDecl> locals() {
    std::vector<LocalDecl> out;
    int start = p_;
    while (is_kw("final")) ++p_;
    std::string t = type();
    bool first = true;
    while (true) {
      LocalDecl d;
      d.token = first ? start : p_;
      d.type = t;
      d.name = ident();
      if (is_op("=")) {
        ++p_;
        d.init = std::make_unique<Expr>(expr());
      }
      out.push_back(std::move(d));
      first = false;
      if (!is_op(",")) break;
      ++p_;
    }
    return out;
  }

  Expr expr_or_assign() {
    int start = p_;
    Expr lhs = expr();
    static const char* assign_ops[] = {"=", "+=", "-=", "*=", "/=", "%="};
    for (const char* o : assign_ops) {
      if (is_op(o)) {
        ++p_;
        Expr a;
        a.kind = std::string("assign:") + o;
        a.token = start;
        a.children.push_back(std::move(lhs));
        a.children.push_back(expr());
        return a;
      }
    }
    return lhs;
  }

  std::unique_ptr<Stmt> stmt() {
    auto s = std::make_unique<Stmt>();
    s->token = p_;
    if (is_op("{")) {
      ++p_;
      s->kind = Stmt::Block;
      while (!is_op("}")) {
        if (at_end()) error("expected '}'");
        s->body.push_back(stmt());
      }
      ++p_;
    } else if (is_op(";")) {
      ++p_;
      s->kind = Stmt::Empty;
    } else if (is_kw("if")) {
      ++p_;
      s->kind = Stmt::If;
      expect("(");
      s->exprs.push_back(expr());
      expect(")");
      s->body.push_back(stmt());
      if (is_kw("else")) {
        ++p_;
        s->has_else = true;
        s->body.push_back(stmt());
      }
    } else if (is_kw("while")) {
      ++p_;
      s->kind = Stmt::While;
      expect("(");
      s->exprs.push_back(expr());
      expect(")");
      s->body.push_back(stmt());
    } else if (is_kw("for")) {
      ++p_;
      s->kind = Stmt::For;
      expect("(");
      if (is_kw("final") || looks_like_decl()) {
        s->locals = locals();
        if (is_op(":")) {  // enhanced for
          ++p_;
          s->exprs.push_back(expr());
          expect(")");
          s->body.push_back(stmt());
          return s;
        }
      } else if (!is_op(";")) {
        s->exprs.push_back(expr_or_assign());
      }
      expect(";");
      if (!is_op(";")) s->exprs.insert(s->exprs.begin(), expr());
      expect(";");
      if (!is_op(")")) {
        s->exprs.push_back(expr_or_assign());
        while (is_op(",")) {
          ++p_;
          s->exprs.push_back(expr_or_assign());
        }
      }
      expect(")");
      s->body.push_back(stmt());
    } else if (is_kw("return")) {
      ++p_;
      s->kind = Stmt::Return;
      if (!is_op(";")) s->exprs.push_back(expr());
      expect(";");
    } else if (is_kw("final") || looks_like_decl()) {
      s->kind = Stmt::Local;
      s->locals = locals();
      expect(";");
    } else {
      s->kind = Stmt::ExprStmt;
      s->exprs.push_back(expr_or_assign());
      expect(";");
    }
    return s;
  }

  Expr binary(Expr lhs, std::string op, Expr rhs, int start) {
    Expr e;
    e.kind = "binary:" + op;
    e.token = start;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() { return ternary(); }

  Expr ternary() {
    int start = p_;
    Expr c = level(0);
    if (!is_op("?")) return c;
    ++p_;
    Expr a = expr();
    expect(":");
    Expr b = expr();
    Expr e;
    e.kind = "ternary";
    e.token = start;
    e.children.push_back(std::move(c));
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
  }

  Expr level(int lv) {
    static const std::vector<std::vector<std::string>> ops = {
        {"||"}, {"&&"}, {"|"}, {"^"}, {"&"}, {"==", "!="}, {"<", ">", "<=", ">="}, {"+", "-"}, {"*", "/", "%"}};
    if (lv == static_cast<int>(ops.size())) return unary();
    int start = p_;
    Expr lhs = level(lv + 1);
    while (tok().kind == Token::Op) {
      const auto& cands = ops[lv];
      auto it = std::find(cands.begin(), cands.end(), tok().text);
      if (it == cands.end()) break;
      std::string op = *it;
      ++p_;
      lhs = binary(std::move(lhs), op, level(lv + 1), start);
    }
    return lhs;
  }

  bool starts_operand(int off) const {
    const auto& t = tok(off);
    if (t.kind == Token::Ident || t.kind == Token::Int || t.kind == Token::Float || t.kind == Token::String ||
        t.kind == Token::Char)
      return true;
    if (t.kind == Token::Keyword) return t.text == "new" || t.text == "true" || t.text == "false" || t.text == "null";
    if (t.kind == Token::Op) return t.text == "(" || t.text == "!" || t.text == "~";
    return false;
  }

  // Length of "( Type )" at the cursor when it reads as a cast, else 0.
  int cast_length() const {
    if (!is_op("(") || !is_ident(1)) return 0;
    int k = 2;
    while (tok(k).kind == Token::Op && tok(k).text == "." && tok(k + 1).kind == Token::Ident) k += 2;
    while (tok(k).kind == Token::Op && tok(k).text == "[" && tok(k + 1).kind == Token::Op && tok(k + 1).text == "]")
      k += 2;
    if (!(tok(k).kind == Token::Op && tok(k).text == ")")) return 0;
    bool primitive = k == 2 && kPrimitives.count(tok(1).text);
    if (starts_operand(k + 1) || (primitive && tok(k + 1).kind == Token::Op && tok(k + 1).text == "-")) return k + 1;
    return 0;
  }

  Expr unary() {
    int start = p_;
    if (tok().kind == Token::Op && (tok().text == "!" || tok().text == "-" || tok().text == "+" ||
                                    tok().text == "~" || tok().text == "++" || tok().text == "--")) {
      std::string op = tok().text;
      ++p_;
      Expr e;
      e.kind = "unary:" + op;
      e.token = start;
      e.children.push_back(unary());
      return e;
    }
    if (int n = cast_length()) {
      ++p_;
      std::string t = type();
      expect(")");
      (void)n;
      Expr e;
      e.kind = "cast:" + t;
      e.token = start;
      e.children.push_back(unary());
      return e;
    }
    Expr e = postfix();
    if (is_op("++") || is_op("--")) {
      Expr u;
      u.kind = "postfix:" + tok().text;
      ++p_;
      u.token = start;
      u.children.push_back(std::move(e));
      return u;
    }
    return e;
  }

  std::vector<Expr> args() {
    std::vector<Expr> out;
    expect("(");
    if (!is_op(")")) {
      out.push_back(expr());
      while (is_op(",")) {
        ++p_;
        out.push_back(expr());
      }
    }
    expect(")");
    return out;
  }

  Expr postfix() {
    int start = p_;
    Expr e = primary();
    while (is_op(".")) {
      ++p_;
      std::string member = ident();
      if (is_op("(")) {
        Expr call;
        call.kind = "call:" + member;
        call.callee = member;
        call.token = start;
        call.children.push_back(std::move(e));
        for (auto& a : args()) call.children.push_back(std::move(a));
        e = std::move(call);
      } else {
        Expr f;
        f.kind = "field:" + member;
        f.token = start;
        f.children.push_back(std::move(e));
        e = std::move(f);
      }
    }
    if (is_op("[")) error("array access is not supported");
    return e;
  }

  Expr primary() {
    int start = p_;
    const auto& t = tok();
    Expr e;
    e.token = start;
    switch (t.kind) {
      case Token::Int: e.kind = "literal:int"; ++p_; return e;
      case Token::Float: e.kind = "literal:float"; ++p_; return e;
      case Token::String: e.kind = "literal:string"; ++p_; return e;
      case Token::Char: e.kind = "literal:char"; ++p_; return e;
      default: break;
    }
    if (is_kw("true") || is_kw("false")) {
      ++p_;
      e.kind = "literal:bool";
      return e;
    }
    if (is_kw("null")) {
      ++p_;
      e.kind = "literal:null";
      return e;
    }
    if (is_kw("new")) {
      ++p_;
      std::string ty = type();
      if (is_op("[")) error("array creation is not supported");
      e.kind = "new:" + ty;
      e.children = args();
      return e;
    }
    if (is_op("(")) {
      ++p_;
      Expr inner = expr();
      expect(")");
      return inner;
    }
    if (is_ident()) {
      // Dotted names stay one name node; a trailing call turns the last part into the callee.
      std::vector<std::string> parts{ident()};
      while (is_op(".") && is_ident(1) && !is_op("(", 2)) {
        p_ += 1;
        parts.push_back(ident());
      }
      if (is_op("(")) {
        e.kind = "call:" + parts.back();
        e.callee = parts.back();
        e.children = args();
        return e;
      }
      e.kind = "name";
      return e;
    }
    error("expected expression");
  }

  Program prog_;
  int p_ = 0;
};

}  // namespace

Program parse(const std::string& source) { return Parser(lex(source)).run(); }

}  // namespace cqs::mj
