#include "chow/param_poly.hpp"

#include <algorithm>
#include <sstream>

namespace chow {

const std::vector<ParamSymbol>& standard_parameters() {
  static const std::vector<ParamSymbol> params = {
      {"q", 0, std::nullopt, "genus of the base curve B"},
      {"rho", 1, std::nullopt, "deg(H - K_B); ramification degree divided by d"},
      {"delta", std::nullopt, std::nullopt, "deg H = 2q - 2 + rho"},
      {"x", 1, std::nullopt, "deg of the rank-3 bundle G with X = P_B(G)"},
      {"mu", std::nullopt, std::nullopt, "fiber-degree shift of the sub line bundle in case (a)"},
      {"v", std::nullopt, std::nullopt, "deg of the rank-3 bundle V in case (b)"},
      {"l", std::nullopt, std::nullopt, "deg of the line bundle L in case (b)"},
      {"k", 0, std::nullopt, "number of singular fibers in case (c)"},
      {"d", 1, std::nullopt, "degree of C -> B"},
      {"g", 0, std::nullopt, "genus of the zero-locus curve C"},
      {"D", std::nullopt, std::nullopt, "third Segre degree H(E)^4"},
      {"r", 0, std::nullopt, "degree of the ramification divisor of C -> B"},
  };
  return params;
}

const ParamSymbol* find_parameter(std::string_view name) {
  for (const auto& p : standard_parameters()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

ParamPoly::Exponents multiply_exponents(const ParamPoly::Exponents& a,
                                        const ParamPoly::Exponents& b) {
  ParamPoly::Exponents out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

unsigned degree_of(const ParamPoly::Exponents& e) {
  unsigned d = 0;
  for (const auto& [_, n] : e) d += n;
  return d;
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::symbol(std::string name) {
  ParamPoly p;
  p.terms_.emplace(Exponents{{std::move(name), 1}}, Rational(1));
  return p;
}

ParamPoly ParamPoly::from_terms(Terms terms) {
  ParamPoly p;
  for (auto& [exps, c] : terms) {
    Exponents cleaned;
    for (auto& [name, n] : exps) {
      if (n != 0) cleaned.emplace_back(name, n);
    }
    std::sort(cleaned.begin(), cleaned.end());
    p.add_term(cleaned, c);
  }
  return p;
}

void ParamPoly::add_term(const Exponents& exps, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational ParamPoly::constant_term() const { return coefficient({}); }

Rational ParamPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::linear_coefficient(const std::string& name) const {
  return coefficient({{name, 1}});
}

std::set<std::string> ParamPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [exps, _] : terms_) {
    for (const auto& [name, _n] : exps) out.insert(name);
  }
  return out;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [exps, _] : terms_) d = std::max(d, degree_of(exps));
  return d;
}

ParamPoly ParamPoly::substitute(const Bindings& bindings) const {
  ParamPoly out;
  for (const auto& [exps, c] : terms_) {
    Rational coef = c;
    Exponents rest;
    for (const auto& [name, n] : exps) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest.emplace_back(name, n);
        continue;
      }
      Rational v = 1;
      for (unsigned i = 0; i < n; ++i) v *= it->second;
      coef *= v;
    }
    out.add_term(rest, coef);
  }
  return out;
}

ParamPoly ParamPoly::substitute(const std::string& name, const ParamPoly& value) const {
  ParamPoly out;
  for (const auto& [exps, c] : terms_) {
    ParamPoly term(c);
    Exponents rest;
    unsigned power = 0;
    for (const auto& [n, e] : exps) {
      if (n == name) {
        power = e;
      } else {
        rest.emplace_back(n, e);
      }
    }
    ParamPoly mono;
    mono.terms_.emplace(rest, Rational(1));
    out += term * mono * value.pow(power);
  }
  return out;
}

std::optional<Rational> ParamPoly::evaluate(const Bindings& bindings) const {
  return substitute(bindings).constant_value();
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(multiply_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

ParamPoly operator-(const ParamPoly& a) {
  ParamPoly out;
  for (const auto& [exps, c] : a.terms_) out.terms_.emplace(exps, -c);
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return degree_of(a->first) > degree_of(b->first);
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [exps, c] = *term;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || exps.empty()) {
      os << mag.get_str();
      wrote = true;
    }
    for (const auto& [name, n] : exps) {
      if (wrote) os << '*';
      os << name;
      if (n > 1) os << '^' << n;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

ParamPoly::Bindings make_bindings(std::initializer_list<std::pair<const char*, long>> values) {
  ParamPoly::Bindings b;
  for (const auto& [name, v] : values) b.emplace(name, Rational(v));
  return b;
}

}  // namespace chow
