#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace chow::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// What an identifier was bound to when the statement was parsed.
enum class NameKind { Unresolved, Param, Generator, Value, Bundle, Ring };

enum class ExprKind {
  Number,     // number
  Name,       // name
  Member,     // name.member  (generator of a named ring)
  Call,       // name(operands...), labels[i] non-empty for `label = expr`
  Add,        // operands[0] + operands[1]
  Sub,        // operands[0] - operands[1]
  Mul,        // operands[0] * operands[1]
  Neg,        // -operands[0]
  Pow,        // operands[0] ^ exponent
  List,       // [operands...]
  Annotated,  // name : number   (generator with degree)
  Rule,       // operands[0] -> operands[1]
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Number;
  SourcePos pos;
  mpz_class number;
  std::string name;
  std::string member;
  std::vector<ExprPtr> operands;
  std::vector<std::string> labels;
  unsigned exponent = 0;

  NameKind resolved = NameKind::Unresolved;
  std::string ring;  // owning ring of a resolved generator
};

/// Structural equality, ignoring source positions.
bool same_expr(const Expr& a, const Expr& b);

struct RingDecl {
  std::string name;
  ExprPtr ctor;
};
struct ParamDecl {
  std::vector<std::string> names;
};
struct LetDecl {
  std::string name;
  ExprPtr value;
};
struct BundleDecl {
  std::string name;
  ExprPtr value;
};
struct AssertEq {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct ExprStmt {
  ExprPtr value;
};

struct Statement {
  std::variant<RingDecl, ParamDecl, LetDecl, BundleDecl, AssertEq, ExprStmt> node;
  SourcePos pos;
};

bool same_statement(const Statement& a, const Statement& b);

struct Program {
  std::vector<Statement> statements;
};

bool same_program(const Program& a, const Program& b);

}  // namespace chow::dsl
