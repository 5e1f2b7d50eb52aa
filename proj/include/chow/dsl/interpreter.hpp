#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "chow/bundle.hpp"
#include "chow/dsl/ast.hpp"
#include "chow/dsl/report.hpp"
#include "chow/errors.hpp"
#include "chow/models.hpp"

namespace chow::dsl {

/// Runtime failure; statement_index is 1-based.
class EvalError : public Error {
 public:
  EvalError(std::size_t statement_index, SourcePos pos, const std::string& message);
  std::size_t statement_index() const { return index_; }
  SourcePos pos() const { return pos_; }

 private:
  std::size_t index_;
  SourcePos pos_;
};

using Value = std::variant<ParamPoly, ChowClass>;

std::string value_to_string(const Value& v);

class Interpreter {
 public:
  /// Receives the printed value of every bare expression statement.
  using EchoFn = std::function<void(const std::string&)>;

  explicit Interpreter(EchoFn echo = {}) : echo_(std::move(echo)) {}

  /// Runs statements in order, appending assertion checks to the report.
  void run(const Program& p);
  void execute(const Statement& s);

  const Report& report() const { return report_; }
  const std::map<std::string, Value>& values() const { return values_; }

 private:
  struct RingEntry {
    VarietyModel model;
    bool has_euler = true;
  };

  Value eval(const Expr& e);
  ChowClass eval_class(const Expr& e, const RingPtr& ring);
  ParamPoly eval_poly(const Expr& e);
  BundleClass eval_bundle(const Expr& e);
  RingEntry eval_ring(const std::string& name, const Expr& ctor);
  RingEntry presented_ring(const std::string& name, const Expr& ctor);
  Value eval_call(const Expr& e);
  const RingEntry& ring_entry(const std::string& name) const;
  const RingEntry& entry_of(const RingPtr& ring) const;
  const RingPtr& current_ring(const Expr& at) const;
  [[noreturn]] void fail(SourcePos pos, const std::string& message) const;

  EchoFn echo_;
  Report report_{kEngineVersion, "script", {}};
  std::map<std::string, RingEntry> rings_;
  std::map<std::string, Value> values_;
  std::map<std::string, BundleClass> bundles_;
  std::string current_ring_;
  std::size_t statement_index_ = 0;
  std::size_t assertion_count_ = 0;
};

/// Evaluates a whole program with a fresh interpreter.
Report eval_program(const Program& p, Interpreter::EchoFn echo = {});

}  // namespace chow::dsl
