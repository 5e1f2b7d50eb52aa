#include <gtest/gtest.h>

#include "chow/errors.hpp"
#include "chow/models.hpp"
#include "chow/ring.hpp"
#include "properties.hpp"
#include "table_oracle.hpp"

using namespace chow;

namespace {

RingSpec two_generator_spec() {
  RingSpec s;
  s.name = "T";
  s.generators = {{"H", 1}, {"F", 1}};
  s.dimension = 3;
  s.rules.push_back({Monomial{{0, 2}}, {}});
  s.rules.push_back({Monomial{{3, 0}}, {{Monomial{{2, 1}}, ParamPoly::symbol("x")}}});
  s.point = Monomial{{2, 1}};
  return s;
}

TEST(Ring, DeclareValidSpec) {
  const RingPtr r = declare_ring(two_generator_spec());
  EXPECT_EQ(r->dimension(), 3u);
  EXPECT_EQ(*r->generator_index("F"), 1u);
  EXPECT_FALSE(r->generator_index("G").has_value());
}

TEST(Ring, RejectsDuplicateGenerator) {
  RingSpec s = two_generator_spec();
  s.generators[1].name = "H";
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, RejectsInhomogeneousRule) {
  RingSpec s = two_generator_spec();
  s.rules[1].rhs = {{Monomial{{1, 0}}, ParamPoly(1)}};
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, RejectsRuleThatDoesNotDecrease) {
  RingSpec s = two_generator_spec();
  // F^2 -> H^2 is grlex-larger with H before F.
  s.rules[0].rhs = {{Monomial{{2, 0}}, ParamPoly(1)}};
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, RejectsOverlappingLeftSides) {
  RingSpec s = two_generator_spec();
  s.rules.push_back({Monomial{{1, 1}}, {}});
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, RejectsReduciblePoint) {
  RingSpec s = two_generator_spec();
  s.point = Monomial{{1, 2}};
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, RejectsPointOfWrongDegree) {
  RingSpec s = two_generator_spec();
  s.point = Monomial{{1, 1}};
  EXPECT_THROW(declare_ring(s), RingSpecError);
}

TEST(Ring, NormalFormAndIntegration) {
  const RingPtr r = declare_ring(two_generator_spec());
  const ChowClass h = ChowClass::generator(r, "H");
  const ChowClass f = ChowClass::generator(r, "F");
  EXPECT_EQ(h.pow(3), ParamPoly::symbol("x") * h * h * f);
  EXPECT_TRUE((f * f).is_zero());
  EXPECT_TRUE(h.pow(4).is_zero());
  EXPECT_EQ(integrate(h * h * f), ParamPoly(1));
  EXPECT_EQ(integrate((h + f).pow(3)), ParamPoly::symbol("x") + 3);
  EXPECT_EQ(integrate(h), ParamPoly(0));
}

TEST(Ring, Components) {
  const RingPtr r = declare_ring(two_generator_spec());
  const ChowClass h = ChowClass::generator(r, "H");
  const ChowClass c = ChowClass::scalar(r, 2) + h + h * h;
  EXPECT_EQ(c.component(0), ChowClass::scalar(r, 2));
  EXPECT_EQ(c.component(2), h * h);
  EXPECT_FALSE(c.is_homogeneous());
  EXPECT_EQ(c.max_degree(), 2u);
  EXPECT_EQ(*(h * h).homogeneous_degree(), 2u);
}

TEST(Ring, ToString) {
  const VarietyModel x = p2_bundle_model(ParamPoly::symbol("q"), ParamPoly::symbol("x"));
  const ChowClass h = ChowClass::generator(x.ring, "H");
  const ChowClass f = ChowClass::generator(x.ring, "F");
  EXPECT_EQ((27 * (ParamPoly::symbol("x") + ParamPoly::symbol("mu")) * h * h * f).to_string(),
            "(27*mu + 27*x)*H^2*F");
  EXPECT_EQ(ChowClass(x.ring).to_string(), "0");
}

TEST(Ring, MixingRingsThrows) {
  const RingPtr a = declare_ring(two_generator_spec());
  const RingPtr b = declare_ring(two_generator_spec());
  const ChowClass ha = ChowClass::generator(a, "H");
  const ChowClass hb = ChowClass::generator(b, "H");
  EXPECT_THROW(ha + hb, RingMismatchError);
  EXPECT_THROW(ha * hb, RingMismatchError);
  EXPECT_FALSE(ha == hb);
}

TEST(Ring, WeightedGenerators) {
  RingSpec s;
  s.name = "W";
  s.generators = {{"a", 1}, {"b", 2}};
  s.dimension = 4;
  s.rules.push_back({Monomial{{4, 0}}, {{Monomial{{0, 2}}, ParamPoly(-1)}}});
  s.point = Monomial{{2, 1}};
  const RingPtr r = declare_ring(s);
  const ChowClass a = ChowClass::generator(r, "a");
  const ChowClass b = ChowClass::generator(r, "b");
  EXPECT_EQ(a.pow(4), -(b * b));
  EXPECT_TRUE(a.pow(5).is_zero());
  EXPECT_EQ(integrate(b * b), ParamPoly(0));
  EXPECT_EQ(integrate(a * a * b), ParamPoly(1));
}

TEST(Ring, SubstituteRenormalizes) {
  const RingPtr r = declare_ring(two_generator_spec());
  const ChowClass h = ChowClass::generator(r, "H");
  const ChowClass c = h.pow(3);
  EXPECT_EQ(c.substitute_param("x", 0), ChowClass(r));
  EXPECT_EQ(integrate(c.substitute_params(make_bindings({{"x", 4}}))), ParamPoly(4));
}

TEST(RingProperties, AxiomsAgreeWithTable) {
  const props::Outcome o = props::ring_axioms_vs_table(1200, 11);
  EXPECT_GE(o.cases, 1000);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(RingProperties, NormalizeIdempotentAgainstTable) {
  const props::Outcome o = props::normalize_idempotence_vs_table(1200, 12);
  EXPECT_GE(o.cases, 1000);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(TableOracle, HandTable) {
  const oracle::Table t(5);
  EXPECT_EQ(t.monomial(3, 0), t.scale(t.basis(oracle::kH2F), 5));
  EXPECT_EQ(t.monomial(0, 2), oracle::TableClass{});
  EXPECT_EQ(t.monomial(2, 1), t.basis(oracle::kH2F));
  EXPECT_EQ(t.monomial(4, 0), oracle::TableClass{});
}

}  // namespace
