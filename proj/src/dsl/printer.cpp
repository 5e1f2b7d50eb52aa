#include "chow/dsl/printer.hpp"

#include <type_traits>

namespace chow::dsl {

namespace {

// Binding strength: rule < sum < product < negation < power < atom.
int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Rule: return 0;
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string join(const Expr& e, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < e.operands.size(); ++i) {
    if (i > from) out += ", ";
    if (i < e.labels.size() && !e.labels[i].empty()) out += e.labels[i] + " = ";
    out += print_expr(*e.operands[i]);
  }
  return out;
}

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return e.number.get_str();
    case ExprKind::Name: return e.name;
    case ExprKind::Member: return e.name + "." + e.member;
    case ExprKind::Call: return e.name + "(" + join(e, 0) + ")";
    case ExprKind::List: return "[" + join(e, 0) + "]";
    case ExprKind::Annotated: return e.name + ":" + e.number.get_str();
    case ExprKind::Add: return wrap(*e.operands[0], 1) + " + " + wrap(*e.operands[1], 2);
    case ExprKind::Sub: return wrap(*e.operands[0], 1) + " - " + wrap(*e.operands[1], 2);
    case ExprKind::Mul: return wrap(*e.operands[0], 2) + "*" + wrap(*e.operands[1], 3);
    case ExprKind::Neg: return "-" + wrap(*e.operands[0], 3);
    case ExprKind::Pow: return wrap(*e.operands[0], 5) + "^" + std::to_string(e.exponent);
    case ExprKind::Rule: return wrap(*e.operands[0], 1) + " -> " + wrap(*e.operands[1], 0);
  }
  return {};
}

std::string print_statement(const Statement& s) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RingDecl>) {
          return "ring " + n.name + " = " + print_expr(*n.ctor);
        } else if constexpr (std::is_same_v<T, ParamDecl>) {
          std::string out = "param ";
          for (std::size_t i = 0; i < n.names.size(); ++i) out += (i ? ", " : "") + n.names[i];
          return out;
        } else if constexpr (std::is_same_v<T, LetDecl>) {
          return "let " + n.name + " = " + print_expr(*n.value);
        } else if constexpr (std::is_same_v<T, BundleDecl>) {
          return "bundle " + n.name + " = " + print_expr(*n.value);
        } else if constexpr (std::is_same_v<T, AssertEq>) {
          return "assert_eq " + print_expr(*n.lhs) + ", " + print_expr(*n.rhs);
        } else {
          return print_expr(*n.value);
        }
      },
      s.node);
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) out += print_statement(s) + ";\n";
  return out;
}

}  // namespace chow::dsl
