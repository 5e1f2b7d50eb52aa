#include "chow/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chow/errors.hpp"

namespace chow {

bool Monomial::divides(const Monomial& other) const {
  if (exps.size() != other.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out{other.exps};
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] -= exps[i];
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out{exps};
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
  return out;
}

// ---------------------------------------------------------------------------
// RingDescriptor
// ---------------------------------------------------------------------------

RingPtr RingDescriptor::declare(RingSpec spec) {
  const std::string& rname = spec.name;
  auto fail = [&](const std::string& what) {
    throw RingSpecError("ring '" + rname + "': " + what);
  };

  if (spec.generators.empty()) fail("no generators");
  std::set<std::string> names;
  for (const auto& g : spec.generators) {
    if (g.name.empty()) fail("empty generator name");
    if (g.degree == 0) fail("generator '" + g.name + "' has degree 0");
    if (!names.insert(g.name).second) fail("duplicate generator '" + g.name + "'");
  }

  // Validation needs degree/order helpers, so build a provisional descriptor.
  RingDescriptor probe(spec);
  const std::size_t n = spec.generators.size();
  auto check_shape = [&](const Monomial& m, const std::string& where) {
    if (m.exps.size() != n) fail(where + ": exponent vector has wrong length");
  };

  for (std::size_t r = 0; r < spec.rules.size(); ++r) {
    const auto& rule = spec.rules[r];
    const std::string where = "rule " + std::to_string(r + 1);
    check_shape(rule.lhs, where);
    const unsigned lhs_deg = probe.degree(rule.lhs);
    if (lhs_deg == 0) fail(where + ": left-hand side is the unit");
    for (const auto& [m, c] : rule.rhs) {
      check_shape(m, where);
      if (c.is_zero()) continue;
      if (probe.degree(m) != lhs_deg) {
        fail(where + ": degree mismatch (" + probe.monomial_to_string(rule.lhs) + " has degree " +
             std::to_string(lhs_deg) + ", " + probe.monomial_to_string(m) + " has degree " +
             std::to_string(probe.degree(m)) + ")");
      }
      if (!probe.grlex_less(m, rule.lhs)) {
        fail(where + ": not decreasing (" + probe.monomial_to_string(m) +
             " is not smaller than " + probe.monomial_to_string(rule.lhs) + ")");
      }
    }
  }
  // Left-hand sides must not share generators; this rules out critical pairs
  // and makes the system confluent.
  for (std::size_t a = 0; a < spec.rules.size(); ++a) {
    for (std::size_t b = a + 1; b < spec.rules.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        if (spec.rules[a].lhs.exps[i] > 0 && spec.rules[b].lhs.exps[i] > 0) {
          fail("overlapping rules " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
               " (both involve '" + spec.generators[i].name + "')");
        }
      }
    }
  }

  check_shape(spec.point, "point");
  if (probe.degree(spec.point) != spec.dimension) fail("point class is not of top degree");
  if (!probe.is_irreducible(spec.point)) fail("point class is reducible");

  for (auto& rule : spec.rules) {
    std::erase_if(rule.rhs, [](const auto& t) { return t.second.is_zero(); });
  }
  return RingPtr(new RingDescriptor(std::move(spec)));
}

std::optional<std::size_t> RingDescriptor::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
    if (spec_.generators[i].name == name) return i;
  }
  return std::nullopt;
}

Monomial RingDescriptor::generator_monomial(std::size_t index, unsigned power) const {
  Monomial m = unit();
  m.exps.at(index) = power;
  return m;
}

unsigned RingDescriptor::degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.exps.size() && i < spec_.generators.size(); ++i) {
    d += m.exps[i] * spec_.generators[i].degree;
  }
  return d;
}

bool RingDescriptor::grlex_less(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree(a);
  const unsigned db = degree(b);
  if (da != db) return da < db;
  return a.exps < b.exps;
}

const RewriteRule* RingDescriptor::reducer(const Monomial& m) const {
  for (const auto& rule : spec_.rules) {
    if (rule.lhs.divides(m)) return &rule;
  }
  return nullptr;
}

std::string RingDescriptor::monomial_to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exps.size() && i < spec_.generators.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << spec_.generators[i].name;
    if (m.exps[i] > 1) os << '^' << m.exps[i];
  }
  return first ? "1" : os.str();
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

using Memo = std::map<Monomial, RawTerms>;

const RawTerms& reduce_monomial(const RingDescriptor& ring, const Monomial& m, Memo& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  RawTerms out;
  if (ring.degree(m) <= ring.dimension()) {
    if (const RewriteRule* rule = ring.reducer(m)) {
      const Monomial cofactor = rule->lhs.quotient_of(m);
      for (const auto& [rm, rc] : rule->rhs) {
        for (const auto& [sm, sc] : reduce_monomial(ring, rm * cofactor, memo)) {
          auto& slot = out[sm];
          slot += rc * sc;
          if (slot.is_zero()) out.erase(sm);
        }
      }
    } else {
      out.emplace(m, ParamPoly(1));
    }
  }
  return memo.emplace(m, std::move(out)).first->second;
}

}  // namespace

ChowClass normalize(const RingPtr& ring, const RawTerms& raw) {
  if (!ring) throw RingSpecError("normalize: null ring");
  Memo memo;
  RawTerms out;
  for (const auto& [m, c] : raw) {
    if (c.is_zero()) continue;
    if (m.exps.size() != ring->num_generators()) {
      throw RingMismatchError("normalize: monomial does not belong to ring '" + ring->name() + "'");
    }
    for (const auto& [nm, nc] : reduce_monomial(*ring, m, memo)) {
      auto& slot = out[nm];
      slot += c * nc;
      if (slot.is_zero()) out.erase(nm);
    }
  }
  return ChowClass(ring, std::move(out));
}

ChowClass normalize(const ChowClass& c) { return normalize(c.ring(), c.terms()); }

// ---------------------------------------------------------------------------
// ChowClass
// ---------------------------------------------------------------------------

ChowClass::ChowClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingSpecError("ChowClass: null ring");
}

ChowClass ChowClass::scalar(RingPtr ring, const ParamPoly& value) {
  RawTerms raw;
  if (ring && !value.is_zero()) raw.emplace(ring->unit(), value);
  return normalize(ring, raw);
}

ChowClass ChowClass::generator(RingPtr ring, std::string_view name) {
  if (!ring) throw RingSpecError("ChowClass: null ring");
  auto idx = ring->generator_index(name);
  if (!idx) {
    throw RingSpecError("ring '" + ring->name() + "' has no generator '" + std::string(name) + "'");
  }
  return monomial(ring, ring->generator_monomial(*idx));
}

ChowClass ChowClass::monomial(RingPtr ring, Monomial m, const ParamPoly& coef) {
  RawTerms raw;
  raw.emplace(std::move(m), coef);
  return normalize(ring, raw);
}

ParamPoly ChowClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

ChowClass ChowClass::component(unsigned degree) const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    if (ring_->degree(m) == degree) out.emplace(m, c);
  }
  return ChowClass(ring_, std::move(out));
}

std::optional<unsigned> ChowClass::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [m, _] : terms_) {
    const unsigned d = ring_->degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

unsigned ChowClass::max_degree() const {
  unsigned d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, ring_->degree(m));
  return d;
}

ChowClass ChowClass::substitute_params(const ParamPoly::Bindings& bindings) const {
  // Rule coefficients may mention the parameters, so rewrite afterwards.
  RawTerms raw;
  for (const auto& [m, c] : terms_) raw.emplace(m, c.substitute(bindings));
  return normalize(ring_, raw);
}

ChowClass ChowClass::substitute_param(const std::string& name, const ParamPoly& value) const {
  RawTerms raw;
  for (const auto& [m, c] : terms_) raw.emplace(m, c.substitute(name, value));
  return normalize(ring_, raw);
}

ChowClass ChowClass::pow(unsigned n) const {
  ChowClass result = scalar(ring_, 1);
  ChowClass base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

void ChowClass::require_same_ring(const ChowClass& o, const char* op) const {
  if (ring_ != o.ring_) {
    throw RingMismatchError(std::string(op) + ": classes live in different rings ('" +
                            ring_->name() + "' vs '" + o.ring_->name() + "')");
  }
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  require_same_ring(o, "add");
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  require_same_ring(o, "subtract");
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot -= c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  a.require_same_ring(b, "multiply");
  const unsigned dim = a.ring_->dimension();
  RawTerms raw;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      if (a.ring_->degree(m) > dim) continue;
      auto& slot = raw[m];
      slot += ca * cb;
    }
  }
  return normalize(a.ring_, raw);
}

ChowClass operator*(const ParamPoly& s, const ChowClass& a) {
  if (s.is_zero()) return ChowClass(a.ring_);
  ChowClass::Terms out;
  for (const auto& [m, c] : a.terms_) {
    ParamPoly v = s * c;
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  return ChowClass(a.ring_, std::move(out));
}

ChowClass operator-(const ChowClass& a) {
  ChowClass::Terms out;
  for (const auto& [m, c] : a.terms_) out.emplace(m, -c);
  return ChowClass(a.ring_, std::move(out));
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* x, auto* y) { return ring_->grlex_less(y->first, x->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [m, c] = *term;
    const bool unit = ring_->degree(m) == 0;
    std::string coef = c.to_string();
    bool negative = false;
    if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
      negative = true;
      coef = (-c).to_string();
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;

    if (unit) {
      os << (c.terms().size() > 1 ? "(" + coef + ")" : coef);
      continue;
    }
    if (coef != "1") {
      os << (c.terms().size() > 1 ? "(" + coef + ")" : coef) << '*';
    }
    os << ring_->monomial_to_string(m);
  }
  return os.str();
}

ParamPoly integrate(const ChowClass& c) { return c.coefficient(c.ring()->point()); }

std::ostream& operator<<(std::ostream& os, const ChowClass& c) { return os << c.to_string(); }

}  // namespace chow
