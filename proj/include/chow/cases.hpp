#pragma once

#include "chow/models.hpp"

namespace chow {

/// Case (a) on X = P_B(G): 0 -> 2H(G) + μF -> E -> H(G) -> 0 numerically,
/// so c1(E) = 3H + μF and c2(E) = 2H² + μHF.
struct CaseAModel {
  VarietyModel threefold;
  BundleClass e;
};

CaseAModel case_a_model(const ParamPoly& q, const ParamPoly& x, const ParamPoly& mu);

/// μ forced by K_X + det E ≡ (2q - 2 + ρ)F, solved from the model's
/// canonical class. Equals ρ - x.
ParamPoly case_a_mu_from_adjunction();

/// D = ∫ c1(E)³ - 2c1(E)c2(E) on X; equals 15x + 17μ.
ParamPoly segre_degree_case_a(const ParamPoly& x, const ParamPoly& mu);
/// D = ∫ ξ⁴ on M = P_X(E), by rewriting with the Grothendieck relation.
ParamPoly segre_degree_case_a_on_projectivization(const ParamPoly& x, const ParamPoly& mu);

/// Case (b) on X = P_B(G): 0 -> π*L -> (π*V) ⊗ H(G) -> E -> 0 with
/// deg V = v, deg L = l, deg G = x.
struct CaseBModel {
  VarietyModel threefold;
  BundleClass twisted;  // (π*V) ⊗ H(G)
  BundleClass sub;      // π*L
  BundleClass e;
};

CaseBModel case_b_model(const ParamPoly& q, const ParamPoly& x, const ParamPoly& v,
                        const ParamPoly& l);

struct CaseBInvariants {
  ChowClass det_e;
  ChowClass c2_e;
  ParamPoly c1_cubed;
  ParamPoly c1c2;
  ParamPoly degree;  // D = c1³ - 2c1c2
  ParamPoly rho;     // from K_X + det E ≡ (2q-2+ρ)F: x + v - l
  /// ∫ c3 of the Whitney quotient; a rank-2 E needs it to vanish, which
  /// is 3l = x + v.
  ParamPoly rank_obstruction;
};

/// With `constrained`, v is eliminated through x + v = 3l (v must be a bare
/// parameter) or, for numeric data, the obstruction must already vanish.
CaseBInvariants case_b_invariants(const ParamPoly& x, const ParamPoly& v, const ParamPoly& l,
                                  bool constrained);

/// The same invariants rewritten in ρ and l by eliminating v = ρ - x + l:
/// c1³ = 27ρ, c1c2 = 9ρ - 3l, D = 9ρ + 6l. With `constrained` the `rho`
/// field holds the forced value 2l.
struct CaseBRhoForm {
  ParamPoly c1_cubed;
  ParamPoly c1c2;
  ParamPoly degree;
  ParamPoly rank_obstruction;   // ρ - 2l
  std::optional<ParamPoly> rho; // 2l when constrained
};

CaseBRhoForm case_b_invariants_in_rho(bool constrained);

}  // namespace chow
