#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow/bundle.hpp"

namespace chow {

/// The three adjunction-theoretic families of (X, E) fibered over a curve.
enum class FibrationCase { A, B, C };

std::string_view case_name(FibrationCase c);
std::optional<FibrationCase> parse_case(std::string_view name);

enum class FiberType { ProjectivePlane, Quadric };

/// Invariants of the restriction E_F to a general fiber F.
///   (a) F = P², E_F = O(2) ⊕ O(1)
///   (b) F = P², E_F = T_P²
///   (c) F = Q², E_F = O_Q(1)^{⊕2}; singular fibers are quadric cones.
struct FiberData {
  FibrationCase tag;
  FiberType type;
  long d;           // c_2(E_F), the degree of C -> B
  long c1_squared;  // c_1(E_F)²
  long euler_fiber;
  std::optional<long> euler_singular_fiber;
};

const FiberData& fiber_data(FibrationCase c);

/// A fiber surface with the restricted bundle, for recomputing FiberData.
struct FiberModel {
  RingPtr ring;
  BundleClass restricted;
};

FiberModel fiber_model(FibrationCase c);

struct VarietyModel {
  std::string name;
  unsigned dim = 0;
  RingPtr ring;                       // null when only numerical data is modeled
  std::optional<ChowClass> canonical; // present whenever ring is
  ParamPoly euler;
  std::vector<MorphismData> morphisms;
  std::optional<FiberData> fiber;

  /// Throws MorphismError when absent.
  const MorphismData& morphism(std::string_view name) const;
  /// First morphism whose target ring is `target`.
  const MorphismData* morphism_to(const RingPtr& target) const;
};

/// Smooth curve of genus q: A(B) = Q[pt]/(pt²).
VarietyModel curve_model(const ParamPoly& q);

/// X = P_B(G) for a rank-3 bundle G of degree x on a curve of genus q.
/// A(X) has basis {1, H, F, H², HF, H²F} with F² = 0 and H³ = x·H²F.
VarietyModel p2_bundle_model(const ParamPoly& q, const ParamPoly& x);
VarietyModel p2_bundle_model(const VarietyModel& base_curve, const ParamPoly& x);

/// Quadric fibration over a curve of genus q with k singular fibers. Only
/// numerical data: there is no Chow ring here.
VarietyModel quadric_fibration_model(const ParamPoly& q, const ParamPoly& k);

/// M = P_X(E) for a rank-2 bundle E on a threefold with a ring. Adds the
/// tautological generator `xi` with ξ² = c1(E)ξ - c2(E).
VarietyModel projectivization_model(const VarietyModel& base, const BundleClass& e);

/// e(Z) for Z the blow-up of X along a curve C.
ParamPoly blowup_euler(const ParamPoly& euler_x, const ParamPoly& euler_c);

}  // namespace chow
