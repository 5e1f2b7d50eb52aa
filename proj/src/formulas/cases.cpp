#include "chow/cases.hpp"

#include "chow/errors.hpp"

namespace chow {

namespace {

const ParamPoly kQ = ParamPoly::symbol("q");
const ParamPoly kRho = ParamPoly::symbol("rho");

ChowClass gen(const VarietyModel& m, const char* name) {
  return ChowClass::generator(m.ring, name);
}

/// Coefficient of F in a class c·F (c a parameter polynomial).
ParamPoly fiber_coefficient(const VarietyModel& x, const ChowClass& c) {
  const ChowClass f = gen(x, "F");
  const auto& fm = f.terms().begin()->first;
  ChowClass rest = c - c.coefficient(fm) * f;
  if (!rest.is_zero()) {
    throw InconsistencyError("expected a multiple of F, got " + c.to_string());
  }
  return c.coefficient(fm);
}

/// Solves the linear equation p = 0 for parameter `name`.
ParamPoly solve_linear(const ParamPoly& p, const std::string& name) {
  const Rational a = p.linear_coefficient(name);
  if (a == 0) throw InconsistencyError("equation does not involve " + name);
  const ParamPoly rest = p - a * ParamPoly::symbol(name);
  if (rest.symbols().count(name)) throw InconsistencyError("equation is not linear in " + name);
  return ParamPoly(Rational(-1 / a)) * rest;
}

BundleClass pulled_back_curve_bundle(const VarietyModel& x, unsigned rank, const ParamPoly& degree) {
  const MorphismData& pi = x.morphism("pi");
  const BundleClass on_b(pi.target, rank, {degree * ChowClass::generator(pi.target, "pt")});
  return pullback_bundle(pi, on_b);
}

}  // namespace

CaseAModel case_a_model(const ParamPoly& q, const ParamPoly& x, const ParamPoly& mu) {
  VarietyModel threefold = p2_bundle_model(q, x);
  const ChowClass h = gen(threefold, "H");
  const ChowClass f = gen(threefold, "F");
  BundleClass e = whitney_sum(BundleClass::line(2 * h + mu * f), BundleClass::line(h));
  return {std::move(threefold), std::move(e)};
}

ParamPoly case_a_mu_from_adjunction() {
  const CaseAModel m = case_a_model(kQ, ParamPoly::symbol("x"), ParamPoly::symbol("mu"));
  const ChowClass adjoint = *m.threefold.canonical + det(m.e);
  return solve_linear(fiber_coefficient(m.threefold, adjoint) - (2 * kQ - 2 + kRho), "mu");
}

ParamPoly segre_degree_case_a(const ParamPoly& x, const ParamPoly& mu) {
  const CaseAModel m = case_a_model(kQ, x, mu);
  return integrate(segre(m.e, 3));
}

ParamPoly segre_degree_case_a_on_projectivization(const ParamPoly& x, const ParamPoly& mu) {
  const CaseAModel m = case_a_model(kQ, x, mu);
  const VarietyModel proj = projectivization_model(m.threefold, m.e);
  return integrate(ChowClass::generator(proj.ring, "xi").pow(4));
}

CaseBModel case_b_model(const ParamPoly& q, const ParamPoly& x, const ParamPoly& v,
                        const ParamPoly& l) {
  VarietyModel threefold = p2_bundle_model(q, x);
  const BundleClass pulled_v = pulled_back_curve_bundle(threefold, 3, v);
  BundleClass twisted = tensor_line(pulled_v, gen(threefold, "H"));
  BundleClass sub = pulled_back_curve_bundle(threefold, 1, l);
  BundleClass e = whitney_quotient(twisted, sub);
  return {std::move(threefold), std::move(twisted), std::move(sub), std::move(e)};
}

CaseBInvariants case_b_invariants(const ParamPoly& x, const ParamPoly& v, const ParamPoly& l,
                                  bool constrained) {
  const CaseBModel m = case_b_model(kQ, x, v, l);
  const ChowClass c1 = det(m.e);
  const ChowClass c2 = m.e.chern(2);

  CaseBInvariants out{c1, c2, {}, {}, {}, {}, {}};
  out.c1_cubed = integrate(c1.pow(3));
  out.c1c2 = integrate(c1 * c2);
  out.degree = integrate(segre(m.e, 3));
  out.rho = fiber_coefficient(m.threefold, *m.threefold.canonical + c1) - (2 * kQ - 2);
  out.rank_obstruction = integrate(quotient_total_chern(m.twisted, m.sub).component(3));

  if (!constrained) return out;
  if (out.rank_obstruction.is_zero()) return out;

  const auto& vs = v.symbols();
  if (vs.size() != 1 || v != ParamPoly::symbol(*vs.begin())) {
    throw ConstraintError("x + v = 3l fails for the given data (obstruction " +
                          out.rank_obstruction.to_string() + ")");
  }
  const std::string name = *vs.begin();
  const ParamPoly v_value = solve_linear(out.rank_obstruction, name);
  auto sub = [&](const ParamPoly& p) { return p.substitute(name, v_value); };
  out.det_e = out.det_e.substitute_param(name, v_value);
  out.c2_e = out.c2_e.substitute_param(name, v_value);
  out.c1_cubed = sub(out.c1_cubed);
  out.c1c2 = sub(out.c1c2);
  out.degree = sub(out.degree);
  out.rho = sub(out.rho);
  out.rank_obstruction = sub(out.rank_obstruction);
  return out;
}

CaseBRhoForm case_b_invariants_in_rho(bool constrained) {
  const ParamPoly x = ParamPoly::symbol("x");
  const ParamPoly v = ParamPoly::symbol("v");
  const ParamPoly l = ParamPoly::symbol("l");
  const CaseBInvariants inv = case_b_invariants(x, v, l, false);

  const ParamPoly v_of_rho = solve_linear(inv.rho - kRho, "v");
  auto sub = [&](const ParamPoly& p) { return p.substitute("v", v_of_rho); };
  CaseBRhoForm out{sub(inv.c1_cubed), sub(inv.c1c2), sub(inv.degree), sub(inv.rank_obstruction),
                   std::nullopt};
  if (constrained) out.rho = solve_linear(out.rank_obstruction, "rho");
  return out;
}

}  // namespace chow
