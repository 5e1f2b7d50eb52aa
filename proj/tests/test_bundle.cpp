#include <gtest/gtest.h>

#include "chow/bundle.hpp"
#include "chow/errors.hpp"
#include "chow/models.hpp"
#include "properties.hpp"

using namespace chow;

namespace {

struct Fixture {
  VarietyModel x = p2_bundle_model(ParamPoly::symbol("q"), ParamPoly::symbol("x"));
  ChowClass h = ChowClass::generator(x.ring, "H");
  ChowClass f = ChowClass::generator(x.ring, "F");
};

TEST(Bundle, ConstructionValidatesDegrees) {
  Fixture s;
  EXPECT_THROW(BundleClass(s.x.ring, 2, {s.h * s.h}), BundleError);
  EXPECT_THROW(BundleClass(s.x.ring, 1, {s.h, s.h * s.f}), BundleError);
  EXPECT_THROW(BundleClass(s.x.ring, 0, {}), BundleError);
  const BundleClass e(s.x.ring, 2, {s.h});
  EXPECT_TRUE(e.chern(2).is_zero());
  EXPECT_TRUE(e.chern(5).is_zero());
  EXPECT_EQ(e.chern(0), ChowClass::scalar(s.x.ring, 1));
}

TEST(Bundle, CaseASumOfLines) {
  Fixture s;
  const ParamPoly mu = ParamPoly::symbol("mu");
  const BundleClass e = whitney_sum(BundleClass::line(2 * s.h + mu * s.f), BundleClass::line(s.h));
  EXPECT_EQ(e.chern(1), 3 * s.h + mu * s.f);
  EXPECT_EQ(e.chern(2), 2 * s.h * s.h + mu * s.h * s.f);
  EXPECT_EQ(integrate(segre(e, 3)), 15 * ParamPoly::symbol("x") + 17 * mu);
}

TEST(Bundle, DualAndDet) {
  Fixture s;
  const BundleClass e(s.x.ring, 2, {s.h + s.f, s.h * s.f});
  const BundleClass d = dual(e);
  EXPECT_EQ(d.chern(1), -(s.h + s.f));
  EXPECT_EQ(d.chern(2), s.h * s.f);
  EXPECT_EQ(det(e), s.h + s.f);
  EXPECT_EQ(dual(d), e);
}

TEST(Bundle, QuotientOfEulerSequence) {
  // O(1)^3 / O on P2 has c = (1 + h)^3.
  const FiberModel m = fiber_model(FibrationCase::B);
  const ChowClass h = ChowClass::generator(m.ring, "h");
  EXPECT_EQ(m.restricted.rank(), 2u);
  EXPECT_EQ(m.restricted.chern(1), 3 * h);
  EXPECT_EQ(m.restricted.chern(2), 3 * h * h);
}

TEST(Bundle, QuotientRejectsNonBundle) {
  Fixture s;
  const BundleClass l = BundleClass::line(s.h);
  EXPECT_THROW(whitney_quotient(BundleClass::trivial(s.x.ring, 1), l), BundleError);
}

TEST(Bundle, TwistRequiresDegreeOne) {
  Fixture s;
  EXPECT_THROW(tensor_line(BundleClass::line(s.h), s.h * s.f), BundleError);
}

TEST(Bundle, PullbackAlongProjection) {
  const VarietyModel b = curve_model(ParamPoly::symbol("q"));
  const VarietyModel x = p2_bundle_model(b, ParamPoly::symbol("x"));
  const MorphismData& pi = x.morphism("pi");
  const ChowClass pt = ChowClass::generator(b.ring, "pt");
  EXPECT_EQ(pullback_class(pi, 3 * pt), 3 * ChowClass::generator(x.ring, "F"));
  const BundleClass v(b.ring, 3, {ParamPoly::symbol("v") * pt});
  EXPECT_EQ(pullback_bundle(pi, v).chern(1), ParamPoly::symbol("v") * ChowClass::generator(x.ring, "F"));
}

TEST(Bundle, PushforwardFromP2Bundle) {
  const VarietyModel b = curve_model(ParamPoly::symbol("q"));
  const VarietyModel x = p2_bundle_model(b, ParamPoly::symbol("x"));
  const MorphismData& pi = x.morphism("pi");
  const ChowClass h = ChowClass::generator(x.ring, "H");
  const ChowClass pt = ChowClass::generator(b.ring, "pt");
  EXPECT_EQ(pushforward(pi, h * h), ChowClass::scalar(b.ring, 1));
  EXPECT_EQ(pushforward(pi, h.pow(3)), ParamPoly::symbol("x") * pt);
  EXPECT_TRUE(pushforward(pi, h).is_zero());
}

TEST(Bundle, PushforwardWithoutSpecThrows) {
  const VarietyModel b = curve_model(ParamPoly::symbol("q"));
  const MorphismData m = make_morphism("id", b.ring, b.ring, {{"pt", ChowClass::generator(b.ring, "pt")}});
  EXPECT_THROW(pushforward(m, ChowClass::generator(b.ring, "pt")), MorphismError);
}

TEST(Bundle, CompositionOfPullbacks) {
  const VarietyModel b = curve_model(ParamPoly::symbol("q"));
  const VarietyModel x = p2_bundle_model(b, ParamPoly::symbol("x"));
  const ChowClass h = ChowClass::generator(x.ring, "H");
  const BundleClass e = whitney_sum(BundleClass::line(h), BundleClass::line(h));
  const VarietyModel m = projectivization_model(x, e);
  const MorphismData& both = m.morphism("pi∘p");
  const MorphismData composed = compose(x.morphism("pi"), m.morphism("p"));
  const ChowClass pt = ChowClass::generator(b.ring, "pt");
  EXPECT_EQ(pullback_class(both, pt), pullback_class(composed, pt));
  EXPECT_EQ(pullback_class(both, pt), ChowClass::generator(m.ring, "F"));
}

TEST(BundleProperties, Whitney) {
  const props::Outcome o = props::whitney(250, 21);
  EXPECT_GE(o.cases, 200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(BundleProperties, SegreTimesDualChern) {
  const props::Outcome o = props::segre_times_dual_chern(250, 22);
  EXPECT_GE(o.cases, 200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(BundleProperties, ProjectionFormula) {
  const props::Outcome o = props::projection_formula(250, 23);
  EXPECT_GE(o.cases, 200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(BundleProperties, PushforwardGrothendieck) {
  const props::Outcome o = props::pushforward_grothendieck(250, 24);
  EXPECT_GE(o.cases, 200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(BundleProperties, TwistDet) {
  const props::Outcome o = props::twist_det(250, 25);
  EXPECT_GE(o.cases, 200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(SubstitutionProperties, NumericOracle) {
  const props::Outcome o = props::substitution_oracle(500, 26);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

}  // namespace
