#pragma once

#include <string>

#include "chow/dsl/ast.hpp"

namespace chow::dsl {

// Canonical source text with the fewest parentheses the grammar allows.
// Parsing the output yields a structurally equal AST.
std::string print_expr(const Expr& e);
std::string print_statement(const Statement& s);
std::string print_program(const Program& p);

}  // namespace chow::dsl
