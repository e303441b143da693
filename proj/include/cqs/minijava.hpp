#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cqs::mj {

struct Pos {
  int line = 1;
  int col = 1;
};

enum class Mark { None, Pos, Neg, Both };

struct Token {
  enum Kind { Ident, Keyword, Int, Float, String, Char, Op, End } kind = End;
  std::string text;
  Pos pos;
  Mark mark = Mark::None;
};

std::vector<Token> lex(const std::string& source);

struct Expr {
  // Stored as the Expr.kind string, e.g. "binary:==", "new:File", "literal:bool".
  std::string kind;
  std::string callee;  // for calls, the last identifier of the call target
  std::vector<Expr> children;
  int token = 0;  // index of the first token
};

struct LocalDecl {
  std::string type;
  std::string name;
  int token = 0;
  std::unique_ptr<Expr> init;
};

struct Stmt {
  enum Kind { Block, Local, ExprStmt, If, For, While, Return, Empty } kind = Empty;
  int token = 0;
  std::vector<LocalDecl> locals;            // Local, and For init
  std::vector<Expr> exprs;                  // ExprStmt / Return value; If/While/For condition first
  std::vector<std::unique_ptr<Stmt>> body;  // Block children, If then/else, loop body
  bool has_else = false;
};

struct Param {
  std::string type;
  std::string name;
  int token = 0;
};

struct Method {
  std::vector<std::string> modifiers;
  std::string ret_type;
  std::string name;
  std::vector<Param> params;
  std::vector<std::unique_ptr<Stmt>> body;
  int token = 0;
};

struct Field {
  std::vector<std::string> modifiers;
  std::string type;
  std::string name;
  int token = 0;
  std::unique_ptr<Expr> init;
};

struct Class {
  std::vector<std::string> modifiers;
  bool is_interface = false;
  std::string name;
  std::string super;  // empty when no extends clause
  std::vector<std::string> interfaces;
  std::vector<Field> fields;
  std::vector<Method> methods;
  int token = 0;
};

struct Import {
  std::string name;
  int token = 0;
};

// Top-level members are allowed so single-method snippets parse as-is.
struct Program {
  std::vector<Token> tokens;
  std::string package;
  std::vector<Import> imports;
  std::vector<Class> classes;
  std::vector<Method> methods;  // outside any class
};

// Throws ParseError with line and column.
Program parse(const std::string& source);

}  // namespace cqs::mj
