#include "chow/dsl/interpreter.hpp"

#include <type_traits>

#include "chow/dsl/printer.hpp"

namespace chow::dsl {

EvalError::EvalError(std::size_t statement_index, SourcePos pos, const std::string& message)
    : Error("statement " + std::to_string(statement_index) + " (line " + std::to_string(pos.line) +
            "): " + message),
      index_(statement_index),
      pos_(pos) {}

std::string value_to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

namespace {

ChowClass lift(const Value& v, const RingPtr& ring) {
  if (const auto* p = std::get_if<ParamPoly>(&v)) return ChowClass::scalar(ring, *p);
  return std::get<ChowClass>(v);
}

const RingPtr* ring_of(const Value& v) {
  if (const auto* c = std::get_if<ChowClass>(&v)) return &c->ring();
  return nullptr;
}

template <class Op>
Value combine(const Value& a, const Value& b, Op op) {
  const RingPtr* ra = ring_of(a);
  const RingPtr* rb = ring_of(b);
  if (!ra && !rb) return op(std::get<ParamPoly>(a), std::get<ParamPoly>(b));
  const RingPtr& ring = ra ? *ra : *rb;
  return op(lift(a, ring), lift(b, ring));
}

long small_int(const Expr& e) {
  if (!e.number.fits_slong_p() || e.number > 1000) throw Error("integer argument too large");
  return e.number.get_si();
}

bool values_equal(const Value& a, const Value& b) {
  const RingPtr* ra = ring_of(a);
  const RingPtr* rb = ring_of(b);
  if (!ra && !rb) return std::get<ParamPoly>(a) == std::get<ParamPoly>(b);
  const RingPtr& ring = ra ? *ra : *rb;
  return lift(a, ring) == lift(b, ring);
}

}  // namespace

void Interpreter::fail(SourcePos pos, const std::string& message) const {
  throw EvalError(statement_index_, pos, message);
}

const Interpreter::RingEntry& Interpreter::ring_entry(const std::string& name) const {
  auto it = rings_.find(name);
  if (it == rings_.end()) throw Error("unknown ring '" + name + "'");
  return it->second;
}

const Interpreter::RingEntry& Interpreter::entry_of(const RingPtr& ring) const {
  for (const auto& [name, entry] : rings_) {
    if (entry.model.ring == ring) return entry;
  }
  throw Error("ring '" + ring->name() + "' was not declared in this script");
}

const RingPtr& Interpreter::current_ring(const Expr& at) const {
  if (current_ring_.empty()) fail(at.pos, "no ring declared");
  return ring_entry(current_ring_).model.ring;
}

// ---------------------------------------------------------------------------

void Interpreter::run(const Program& p) {
  for (const auto& s : p.statements) execute(s);
}

void Interpreter::execute(const Statement& s) {
  ++statement_index_;
  try {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, RingDecl>) {
            rings_.insert_or_assign(n.name, eval_ring(n.name, *n.ctor));
            current_ring_ = n.name;
          } else if constexpr (std::is_same_v<T, ParamDecl>) {
            // Parameters are free symbols; nothing to store.
          } else if constexpr (std::is_same_v<T, LetDecl>) {
            values_.insert_or_assign(n.name, eval(*n.value));
          } else if constexpr (std::is_same_v<T, BundleDecl>) {
            bundles_.insert_or_assign(n.name, eval_bundle(*n.value));
          } else if constexpr (std::is_same_v<T, AssertEq>) {
            const Value lhs = eval(*n.lhs);
            const Value rhs = eval(*n.rhs);
            Check c;
            c.id = "assert-" + std::to_string(++assertion_count_);
            c.description = print_statement(s);
            c.anchor = "line " + std::to_string(s.pos.line);
            c.passed = values_equal(lhs, rhs);
            c.expected = value_to_string(rhs);
            c.actual = value_to_string(lhs);
            report_.add(std::move(c));
          } else {
            const Value v = eval(*n.value);
            if (echo_) echo_(value_to_string(v));
          }
        },
        s.node);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(statement_index_, s.pos, e.what());
  }
}

// ---------------------------------------------------------------------------
// Values

Value Interpreter::eval(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return ParamPoly(Rational(e.number));
    case ExprKind::Name:
    case ExprKind::Member: {
      switch (e.resolved) {
        case NameKind::Param:
          return ParamPoly::symbol(e.name);
        case NameKind::Value: {
          auto it = values_.find(e.name);
          if (it == values_.end()) fail(e.pos, "unbound value '" + e.name + "'");
          return it->second;
        }
        case NameKind::Generator: {
          const std::string& gen = e.kind == ExprKind::Member ? e.member : e.name;
          return ChowClass::generator(ring_entry(e.ring).model.ring, gen);
        }
        default:
          fail(e.pos, "'" + e.name + "' is not a value");
      }
    }
    case ExprKind::Add:
      return combine(eval(*e.operands[0]), eval(*e.operands[1]),
                     [](const auto& a, const auto& b) -> Value { return a + b; });
    case ExprKind::Sub:
      return combine(eval(*e.operands[0]), eval(*e.operands[1]),
                     [](const auto& a, const auto& b) -> Value { return a - b; });
    case ExprKind::Mul:
      return combine(eval(*e.operands[0]), eval(*e.operands[1]),
                     [](const auto& a, const auto& b) -> Value { return a * b; });
    case ExprKind::Neg:
      return std::visit([](const auto& a) -> Value { return -a; }, eval(*e.operands[0]));
    case ExprKind::Pow:
      return std::visit([&](const auto& a) -> Value { return a.pow(e.exponent); },
                        eval(*e.operands[0]));
    case ExprKind::Call:
      return eval_call(e);
    default:
      fail(e.pos, "not a value expression: " + print_expr(e));
  }
}

ChowClass Interpreter::eval_class(const Expr& e, const RingPtr& ring) {
  const Value v = eval(e);
  ChowClass c = lift(v, ring);
  if (c.ring() != ring) {
    fail(e.pos, "class lives in ring '" + entry_of(c.ring()).model.name + "', expected '" +
                    entry_of(ring).model.name + "'");
  }
  return c;
}

ParamPoly Interpreter::eval_poly(const Expr& e) {
  Value v = eval(e);
  if (auto* p = std::get_if<ParamPoly>(&v)) return *p;
  const ChowClass& c = std::get<ChowClass>(v);
  if (c.is_zero()) return 0;
  if (c.homogeneous_degree() == 0u) return c.coefficient(c.ring()->unit());
  fail(e.pos, "expected a parameter polynomial, got class " + c.to_string());
}

Value Interpreter::eval_call(const Expr& e) {
  const std::string& f = e.name;
  const auto& args = e.operands;
  if (f == "integrate") {
    Value v = eval(*args[0]);
    if (auto* c = std::get_if<ChowClass>(&v)) return integrate(*c);
    fail(e.pos, "integrate expects a class, got the scalar " + value_to_string(v));
  }
  if (f == "part") {
    Value v = eval(*args[0]);
    const long deg = small_int(*args[1]);
    if (auto* c = std::get_if<ChowClass>(&v)) return c->component(static_cast<unsigned>(deg));
    return deg == 0 ? v : Value(ParamPoly(0));
  }
  if (f == "chern") return eval_bundle(*args[0]).chern(static_cast<unsigned>(small_int(*args[1])));
  if (f == "segre") return segre(eval_bundle(*args[0]), static_cast<unsigned>(small_int(*args[1])));
  if (f == "det") return det(eval_bundle(*args[0]));
  if (f == "canonical") {
    const RingEntry& r = ring_entry(args[0]->name);
    if (!r.model.canonical) fail(e.pos, "ring '" + args[0]->name + "' has no canonical class");
    return *r.model.canonical;
  }
  if (f == "euler") {
    const RingEntry& r = ring_entry(args[0]->name);
    if (!r.has_euler) fail(e.pos, "ring '" + args[0]->name + "' has no Euler number");
    return r.model.euler;
  }
  if (f == "pullback") {
    const RingEntry& source = ring_entry(args[0]->name);
    Value v = eval(*args[1]);
    const RingPtr* target = ring_of(v);
    if (!target || *target == source.model.ring) return v;
    const MorphismData* m = source.model.morphism_to(*target);
    if (!m) fail(e.pos, "no morphism from '" + args[0]->name + "' to the ring of the argument");
    return pullback_class(*m, std::get<ChowClass>(v));
  }
  if (f == "pushforward") {
    const RingEntry& target = ring_entry(args[0]->name);
    Value v = eval(*args[1]);
    const RingPtr* source = ring_of(v);
    if (!source) fail(e.pos, "pushforward expects a class");
    const MorphismData* m = entry_of(*source).model.morphism_to(target.model.ring);
    if (!m) fail(e.pos, "no morphism from the ring of the argument to '" + args[0]->name + "'");
    return pushforward(*m, std::get<ChowClass>(v));
  }
  if (f == "subst") {
    // Simultaneous substitution: rename to fresh symbols first.
    Value v = eval(*args[0]);
    std::vector<std::pair<std::string, ParamPoly>> finals;
    for (std::size_t i = 1; i < args.size(); ++i) {
      const std::string fresh = "%" + std::to_string(i);
      const ParamPoly tmp = ParamPoly::symbol(fresh);
      v = std::visit([&](const auto& x) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ParamPoly>) {
          return x.substitute(e.labels[i], tmp);
        } else {
          return x.substitute_param(e.labels[i], tmp);
        }
      }, v);
      finals.emplace_back(fresh, eval_poly(*args[i]));
    }
    for (const auto& [fresh, value] : finals) {
      v = std::visit([&](const auto& x) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ParamPoly>) {
          return x.substitute(fresh, value);
        } else {
          return x.substitute_param(fresh, value);
        }
      }, v);
    }
    return v;
  }
  fail(e.pos, "unknown function '" + f + "'");
}

// ---------------------------------------------------------------------------
// Bundles

BundleClass Interpreter::eval_bundle(const Expr& e) {
  if (e.kind == ExprKind::Name) {
    auto it = bundles_.find(e.name);
    if (it == bundles_.end()) fail(e.pos, "unknown bundle '" + e.name + "'");
    return it->second;
  }
  const std::string& f = e.name;
  const auto& args = e.operands;
  if (f == "classes") {
    // The ring comes from the first class-valued argument, else the current ring.
    std::vector<Value> vals;
    const RingPtr* ring = nullptr;
    for (std::size_t i = 1; i < args.size(); ++i) {
      vals.push_back(eval(*args[i]));
      if (!ring) ring = ring_of(vals.back());
    }
    const RingPtr& r = ring ? *ring : current_ring(e);
    std::vector<ChowClass> chern;
    for (const auto& v : vals) chern.push_back(lift(v, r));
    return BundleClass(r, static_cast<unsigned>(small_int(*args[0])), std::move(chern));
  }
  if (f == "line") {
    const Value v = eval(*args[0]);
    const RingPtr* ring = ring_of(v);
    return BundleClass::line(lift(v, ring ? *ring : current_ring(e)));
  }
  if (f == "trivial") {
    return BundleClass::trivial(current_ring(e), static_cast<unsigned>(small_int(*args[0])));
  }
  if (f == "sum") return whitney_sum(eval_bundle(*args[0]), eval_bundle(*args[1]));
  if (f == "quotient") return whitney_quotient(eval_bundle(*args[0]), eval_bundle(*args[1]));
  if (f == "twist") {
    BundleClass b = eval_bundle(*args[0]);
    return tensor_line(b, eval_class(*args[1], b.ring()));
  }
  if (f == "dual") return dual(eval_bundle(*args[0]));
  if (f == "pullback") {
    const RingEntry& source = ring_entry(args[0]->name);
    BundleClass b = eval_bundle(*args[1]);
    if (b.ring() == source.model.ring) return b;
    const MorphismData* m = source.model.morphism_to(b.ring());
    if (!m) fail(e.pos, "no morphism from '" + args[0]->name + "' to the ring of the bundle");
    return pullback_bundle(*m, b);
  }
  fail(e.pos, "unknown bundle constructor '" + f + "'");
}

// ---------------------------------------------------------------------------
// Rings

Interpreter::RingEntry Interpreter::eval_ring(const std::string& name, const Expr& ctor) {
  const std::string& f = ctor.name;
  const auto& args = ctor.operands;
  RingEntry entry;
  if (f == "curve") {
    entry.model = curve_model(eval_poly(*args[0]));
  } else if (f == "p2_bundle") {
    const ParamPoly x = eval_poly(*args[1]);
    if (args[0]->resolved == NameKind::Ring) {
      entry.model = p2_bundle_model(ring_entry(args[0]->name).model, x);
    } else {
      entry.model = p2_bundle_model(eval_poly(*args[0]), x);
    }
  } else if (f == "proj") {
    const RingEntry& base = ring_entry(args[0]->name);
    BundleClass b = eval_bundle(*args[1]);
    if (b.ring() != base.model.ring) fail(ctor.pos, "bundle does not live on '" + args[0]->name + "'");
    entry.model = projectivization_model(base.model, b);
  } else if (f == "presented") {
    return presented_ring(name, ctor);
  } else {
    fail(ctor.pos, "unknown ring constructor '" + f + "'");
  }
  entry.model.name = name;
  return entry;
}

// Rule and point expressions are evaluated in a free ring on the same
// generators whose dimension is large enough that nothing truncates.
Interpreter::RingEntry Interpreter::presented_ring(const std::string& name, const Expr& ctor) {
  const auto& args = ctor.operands;
  RingSpec spec;
  spec.name = name;
  spec.dimension = static_cast<unsigned>(small_int(*args[0]));
  for (const auto& g : args[1]->operands) {
    const unsigned deg = g->kind == ExprKind::Annotated ? static_cast<unsigned>(small_int(*g)) : 1;
    spec.generators.push_back({g->name, deg});
  }

  RingSpec free_spec;
  free_spec.name = name;
  free_spec.generators = spec.generators;
  const unsigned top_power = 4 * spec.dimension + 8;
  free_spec.dimension = spec.generators[0].degree * top_power;
  free_spec.point.exps.assign(spec.generators.size(), 0);
  free_spec.point.exps[0] = top_power;
  RingEntry scratch;
  scratch.model.name = name;
  scratch.model.ring = declare_ring(free_spec);
  scratch.has_euler = false;

  auto single_monomial = [&](const Expr& e, const char* what) {
    const ChowClass c = eval_class(e, scratch.model.ring);
    if (c.terms().size() != 1 || !(c.terms().begin()->second == ParamPoly(1))) {
      fail(e.pos, std::string(what) + " must be a single monomial with coefficient 1, got " +
                      c.to_string());
    }
    return c.terms().begin()->first;
  };

  rings_.insert_or_assign(name, scratch);
  try {
    for (const auto& r : args[2]->operands) {
      RewriteRule rule;
      rule.lhs = single_monomial(*r->operands[0], "rule left side");
      rule.rhs = eval_class(*r->operands[1], scratch.model.ring).terms();
      spec.rules.push_back(std::move(rule));
    }
    spec.point = single_monomial(*args[3], "point class");
  } catch (...) {
    rings_.erase(name);
    throw;
  }
  rings_.erase(name);

  RingEntry entry;
  entry.model.name = name;
  entry.model.dim = spec.dimension;
  entry.model.ring = declare_ring(std::move(spec));
  entry.has_euler = false;
  return entry;
}

Report eval_program(const Program& p, Interpreter::EchoFn echo) {
  Interpreter interp(std::move(echo));
  interp.run(p);
  return interp.report();
}

}  // namespace chow::dsl
