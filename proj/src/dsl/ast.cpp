#include "chow/dsl/ast.hpp"

#include <type_traits>

namespace chow::dsl {

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.member != b.member ||
      a.labels != b.labels || a.exponent != b.exponent || a.resolved != b.resolved ||
      a.ring != b.ring || a.operands.size() != b.operands.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!same_expr(*a.operands[i], *b.operands[i])) return false;
  }
  return true;
}

bool same_statement(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, RingDecl>) {
          return x.name == y.name && same_expr(*x.ctor, *y.ctor);
        } else if constexpr (std::is_same_v<T, ParamDecl>) {
          return x.names == y.names;
        } else if constexpr (std::is_same_v<T, LetDecl> || std::is_same_v<T, BundleDecl>) {
          return x.name == y.name && same_expr(*x.value, *y.value);
        } else if constexpr (std::is_same_v<T, AssertEq>) {
          return same_expr(*x.lhs, *y.lhs) && same_expr(*x.rhs, *y.rhs);
        } else {
          return same_expr(*x.value, *y.value);
        }
      },
      a.node);
}

bool same_program(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!same_statement(a.statements[i], b.statements[i])) return false;
  }
  return true;
}

}  // namespace chow::dsl
