#pragma once

#include "chow/models.hpp"

namespace chow {

/// The numerical inputs of the double point inequality for (Z, H(E)_Z),
/// Z ∈ |H(E)| on M = P_X(E) and S ∈ |H(E)_Z|.
///
/// χ(O_Z) = χ(O_X) = χ(O_B) = 1 - q because Z is the blow-up of X along C.
/// χ(O_S) = ρ follows from K_S = φ*H, h¹(H) = 0 (Kodaira vanishing),
/// h¹(O_S) = q and Riemann-Roch on B; those are carried as closed forms.
/// The remaining entries are intersection numbers computed on M.
struct CaseBoundInput {
  FiberData fiber;
  ParamPoly euler_z;
  ParamPoly chi_oz;
  ParamPoly chi_os;
  ParamPoly ks_squared;   // K_S² = (φ*H)²
  ParamPoly adjoint_cube; // (K_Z + H(E)_Z)³ = (p*π*H)³·ξ
  ParamPoly ks_dot_hs;    // K_S·H(E)_S = δ·H(E_F)³
};

/// Builds the inputs for one case from the geometry models.
CaseBoundInput case_bound_input(FibrationCase c);

/// e(Z) - 48χ(O_Z) + 84χ(O_S) - 11K_S² - 17K_S·H_S - (K_Z+H_Z)³ + D(D-20).
ParamPoly double_point_lhs(const CaseBoundInput& in, const ParamPoly& degree);

/// The reduced left side, written directly from the fiber invariants:
/// e(Z) - 48(1-q) + 84ρ - 17(2q-2+ρ)(c1(E_F)² - d) + D(D-20).
ParamPoly reduced_double_point_lhs(const ParamPoly& euler_z, const FiberData& fiber,
                                   const ParamPoly& degree);

/// D(D - 20) ≥ A(q - 1) + Bρ + Ck.
struct BoundResult {
  FibrationCase tag;
  long a = 0;
  long b = 0;
  long c = 0;
  ParamPoly lhs;
  ParamPoly residual;          // D(D-20) - (lhs + A(q-1) + Bρ + Ck)
  ParamPoly reduced_residual;  // lhs - reduced_double_point_lhs
};

/// Throws InconsistencyError on a nonzero residual.
BoundResult derive_case_bound(FibrationCase c);

/// Right-hand side A(q-1) + Bρ + Ck evaluated at integers.
long bound_rhs(const BoundResult& bound, long q, long rho, long k = 0);

}  // namespace chow
