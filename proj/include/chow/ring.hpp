#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chow/param_poly.hpp"

namespace chow {

/// Exponent vector over a ring's generators, in generator-priority order.
struct Monomial {
  std::vector<unsigned> exps;

  bool divides(const Monomial& other) const;
  /// Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  auto operator<=>(const Monomial&) const = default;
};

using RawTerms = std::map<Monomial, ParamPoly>;

struct Generator {
  std::string name;
  unsigned degree = 1;
};

/// lhs -> rhs, where rhs is a linear combination of monomials of the same
/// degree, each strictly smaller than lhs.
struct RewriteRule {
  Monomial lhs;
  RawTerms rhs;
};

struct RingSpec {
  std::string name;
  std::vector<Generator> generators;  // highest priority first
  unsigned dimension = 0;
  std::vector<RewriteRule> rules;
  Monomial point;
};

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// Graded commutative ring presented by generators and a terminating,
/// non-overlapping monomial rewrite system. Monomials above the dimension
/// are zero. Rings are immutable and compared by identity.
class RingDescriptor {
 public:
  /// Validates the presentation; throws RingSpecError on violations.
  static RingPtr declare(RingSpec spec);

  const std::string& name() const { return spec_.name; }
  const std::vector<Generator>& generators() const { return spec_.generators; }
  std::size_t num_generators() const { return spec_.generators.size(); }
  unsigned dimension() const { return spec_.dimension; }
  const std::vector<RewriteRule>& rules() const { return spec_.rules; }
  const Monomial& point() const { return spec_.point; }

  std::optional<std::size_t> generator_index(std::string_view name) const;
  Monomial unit() const { return Monomial{std::vector<unsigned>(num_generators(), 0)}; }
  Monomial generator_monomial(std::size_t index, unsigned power = 1) const;
  unsigned degree(const Monomial& m) const;
  /// Graded lexicographic order, ties broken by generator priority.
  bool grlex_less(const Monomial& a, const Monomial& b) const;
  /// First rule whose lhs divides m.
  const RewriteRule* reducer(const Monomial& m) const;
  bool is_irreducible(const Monomial& m) const { return reducer(m) == nullptr; }

  std::string monomial_to_string(const Monomial& m) const;

 private:
  explicit RingDescriptor(RingSpec spec) : spec_(std::move(spec)) {}

  RingSpec spec_;
};

inline RingPtr declare_ring(RingSpec spec) { return RingDescriptor::declare(std::move(spec)); }

/// Element of a host ring in normal form: every stored monomial is
/// irreducible, of degree at most the dimension, with a nonzero coefficient.
class ChowClass {
 public:
  using Terms = RawTerms;

  explicit ChowClass(RingPtr ring);

  static ChowClass scalar(RingPtr ring, const ParamPoly& value);
  static ChowClass generator(RingPtr ring, std::string_view name);
  static ChowClass monomial(RingPtr ring, Monomial m, const ParamPoly& coef = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ParamPoly coefficient(const Monomial& m) const;
  ChowClass component(unsigned degree) const;
  /// Degree of a nonzero homogeneous class; empty for zero or mixed classes.
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  unsigned max_degree() const;

  ChowClass substitute_params(const ParamPoly::Bindings& bindings) const;
  ChowClass substitute_param(const std::string& name, const ParamPoly& value) const;
  ChowClass pow(unsigned n) const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ParamPoly& s, const ChowClass& a);
  friend ChowClass operator*(const ChowClass& a, const ParamPoly& s) { return s * a; }
  friend ChowClass operator-(const ChowClass& a);
  /// Different rings compare unequal.
  friend bool operator==(const ChowClass& a, const ChowClass& b);

  std::string to_string() const;

 private:
  friend ChowClass normalize(const RingPtr& ring, const RawTerms& raw);
  ChowClass(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void require_same_ring(const ChowClass& o, const char* op) const;

  RingPtr ring_;
  Terms terms_;
};

/// Rewrites an arbitrary combination of monomials to normal form.
ChowClass normalize(const RingPtr& ring, const RawTerms& raw);
/// Idempotent re-normalization of an existing class.
ChowClass normalize(const ChowClass& c);

/// Coefficient of the point monomial in the top-degree component.
ParamPoly integrate(const ChowClass& c);

std::ostream& operator<<(std::ostream& os, const ChowClass& c);

}  // namespace chow
