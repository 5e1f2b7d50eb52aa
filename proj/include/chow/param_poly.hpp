#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// A named integer-valued parameter with its documented range. The range is
/// metadata for the search code and never affects arithmetic.
struct ParamSymbol {
  std::string name;
  std::optional<long> min;
  std::optional<long> max;
  std::string meaning;
};

/// The parameters used throughout the models (q, rho, delta, x, mu, v, l, k,
/// d, g, D, r).
const std::vector<ParamSymbol>& standard_parameters();
const ParamSymbol* find_parameter(std::string_view name);

/// Polynomial with exact rational coefficients in named parameters.
///
/// Terms are keyed by exponent vectors sorted by parameter name, with zero
/// coefficients never stored, so structural equality is mathematical equality.
class ParamPoly {
 public:
  using Exponents = std::vector<std::pair<std::string, unsigned>>;
  using Terms = std::map<Exponents, Rational>;
  using Bindings = std::map<std::string, Rational>;

  ParamPoly() = default;
  ParamPoly(int c) : ParamPoly(Rational(c)) {}    // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& c);                   // NOLINT(google-explicit-constructor)

  static ParamPoly symbol(std::string name);
  static ParamPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when the polynomial has no parameters.
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;
  /// Coefficient of the degree-one monomial `name`.
  Rational linear_coefficient(const std::string& name) const;
  std::set<std::string> symbols() const;
  unsigned total_degree() const;

  /// Replace bound parameters by their values; unbound ones stay symbolic.
  ParamPoly substitute(const Bindings& bindings) const;
  /// Replace one parameter by a polynomial.
  ParamPoly substitute(const std::string& name, const ParamPoly& value) const;
  /// Full evaluation; empty when some parameter is left unbound.
  std::optional<Rational> evaluate(const Bindings& bindings) const;

  ParamPoly pow(unsigned n) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const Rational& coef);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

ParamPoly::Bindings make_bindings(std::initializer_list<std::pair<const char*, long>> values);

}  // namespace chow
