#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "chow/dsl/ast.hpp"
#include "chow/errors.hpp"

namespace chow::dsl {

/// Lexical, syntax, binding and type errors, with the offending position.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::string token, const std::string& message);

  SourcePos pos() const { return pos_; }
  const std::string& token() const { return token_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string token_;
  std::string message_;
};

/// Names visible to later statements. The standard parameters (q, rho,
/// delta, x, mu, v, l, k, d, g, D, r) are predeclared.
struct Scope {
  std::set<std::string> params;
  std::map<std::string, std::vector<std::string>> rings;  // ring -> generators
  std::set<std::string> values;
  std::set<std::string> bundles;
  std::string current_ring;

  static Scope initial();
  bool is_bound(const std::string& name) const;
};

/// Parses with a persistent scope, so a REPL can feed one line at a time.
class Parser {
 public:
  Parser() : scope_(Scope::initial()) {}
  explicit Parser(Scope scope) : scope_(std::move(scope)) {}

  /// On error the scope is left unchanged.
  Program parse(std::string_view text);
  const Scope& scope() const { return scope_; }

 private:
  Scope scope_;
};

Program parse_program(std::string_view text);

}  // namespace chow::dsl
