#include "chow/double_point.hpp"

#include "chow/cases.hpp"
#include "chow/errors.hpp"
#include "chow/genus.hpp"

namespace chow {

namespace {

const ParamPoly kQ = ParamPoly::symbol("q");
const ParamPoly kRho = ParamPoly::symbol("rho");
const ParamPoly kK = ParamPoly::symbol("k");

/// (K_X + det E) restricted class H on B, pulled back to M along π∘p.
ChowClass adjoint_on_m(const VarietyModel& m, const ParamPoly& delta) {
  const MorphismData& to_base = m.morphism("pi∘p");
  return pullback_class(to_base, delta * ChowClass::generator(to_base.target, "pt"));
}

/// Projectivization of the generic case (a) or (b) bundle.
VarietyModel generic_m(FibrationCase c) {
  if (c == FibrationCase::A) {
    const CaseAModel a = case_a_model(kQ, ParamPoly::symbol("x"), ParamPoly::symbol("mu"));
    return projectivization_model(a.threefold, a.e);
  }
  const CaseBModel b = case_b_model(kQ, ParamPoly::symbol("x"), ParamPoly::symbol("v"),
                                    ParamPoly::symbol("l"));
  return projectivization_model(b.threefold, b.e);
}

}  // namespace

CaseBoundInput case_bound_input(FibrationCase c) {
  const FiberData& fiber = fiber_data(c);
  const FibrationGenusData genus{fiber.d, kQ, kRho, false};
  const ParamPoly delta = genus.delta();

  CaseBoundInput in;
  in.fiber = fiber;
  in.chi_oz = 1 - kQ;
  in.chi_os = kRho;

  const ParamPoly euler_x = c == FibrationCase::C ? quadric_fibration_model(kQ, kK).euler
                                                  : p2_bundle_model(kQ, ParamPoly::symbol("x")).euler;
  in.euler_z = blowup_euler(euler_x, zero_curve_euler(genus));

  if (c == FibrationCase::C) {
    // No ring on X here; (φ*H)² and (p*π*H)³ vanish because H² = 0 on B.
    const VarietyModel b = curve_model(kQ);
    const ChowClass h = delta * ChowClass::generator(b.ring, "pt");
    if (!h.pow(2).is_zero()) throw InconsistencyError("H² on the base curve is not zero");
    in.ks_squared = 0;
    in.adjoint_cube = 0;
  } else {
    // S = ξ·ξ and Z = ξ on M, so (φ*H)² = (p*π*H)²ξ² and
    // (K_Z + H_Z)³ = (K_M + 2ξ)³ξ = (p*π*H)³ξ.
    const VarietyModel m = generic_m(c);
    const ChowClass xi = ChowClass::generator(m.ring, "xi");
    const ChowClass pulled = adjoint_on_m(m, delta);
    in.ks_squared = integrate(pulled.pow(2) * xi.pow(2));
    in.adjoint_cube = integrate(pulled.pow(3) * xi);
  }

  // K_S·H_S = (p*π*H)·ξ³ = δ·H(E_F)³ = δ·s_2(E_F).
  const FiberModel fm = fiber_model(c);
  in.ks_dot_hs = delta * integrate(segre(fm.restricted, 2));
  return in;
}

ParamPoly double_point_lhs(const CaseBoundInput& in, const ParamPoly& degree) {
  return in.euler_z - 48 * in.chi_oz + 84 * in.chi_os - 11 * in.ks_squared - 17 * in.ks_dot_hs -
         in.adjoint_cube + degree * (degree - 20);
}

ParamPoly reduced_double_point_lhs(const ParamPoly& euler_z, const FiberData& fiber,
                                   const ParamPoly& degree) {
  return euler_z - 48 * (1 - kQ) + 84 * kRho -
         17 * (2 * kQ - 2 + kRho) * (fiber.c1_squared - fiber.d) + degree * (degree - 20);
}

BoundResult derive_case_bound(FibrationCase c) {
  const ParamPoly degree = ParamPoly::symbol("D");
  const CaseBoundInput in = case_bound_input(c);

  BoundResult out;
  out.tag = c;
  out.lhs = double_point_lhs(in, degree);
  out.reduced_residual = out.lhs - reduced_double_point_lhs(in.euler_z, in.fiber, degree);

  // D(D-20) - lhs = A(q-1) + Bρ + Ck.
  const ParamPoly rhs = degree * (degree - 20) - out.lhs;
  auto integral = [&](const Rational& r, const char* what) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) {
      throw InconsistencyError(std::string("bound coefficient ") + what + " is not an integer");
    }
    return r.get_num().get_si();
  };
  out.a = integral(rhs.linear_coefficient("q"), "A");
  out.b = integral(rhs.linear_coefficient("rho"), "B");
  out.c = integral(rhs.linear_coefficient("k"), "C");
  out.residual = degree * (degree - 20) -
                 (out.lhs + out.a * (kQ - 1) + out.b * kRho + out.c * kK);

  if (!out.residual.is_zero()) {
    throw InconsistencyError("case (" + std::string(case_name(c)) +
                             "): bound residual is not zero: " + out.residual.to_string());
  }
  if (!out.reduced_residual.is_zero()) {
    throw InconsistencyError("case (" + std::string(case_name(c)) +
                             "): double point inputs disagree with the reduced form: " +
                             out.reduced_residual.to_string());
  }
  return out;
}

long bound_rhs(const BoundResult& bound, long q, long rho, long k) {
  return bound.a * (q - 1) + bound.b * rho + bound.c * k;
}

}  // namespace chow
