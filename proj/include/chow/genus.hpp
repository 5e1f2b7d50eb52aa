#pragma once

#include "chow/param_poly.hpp"

namespace chow {

/// Degree and ramification bookkeeping for the zero-locus curve C -> B.
///
/// With d = deg(C -> B), q = g(B) and r = dρ the ramification degree:
///   δ = deg H = 2q - 2 + ρ,   2g - 2 = d(2q - 2 + ρ).
struct FibrationGenusData {
  ParamPoly d;
  ParamPoly q;
  ParamPoly rho;
  /// C hyperelliptic of genus ≥ 2; with q ≥ 1 this forces ρ ∈ {1, 2}.
  bool hyperelliptic = false;

  ParamPoly delta() const { return 2 * q - 2 + rho; }
  ParamPoly ramification() const { return d * rho; }
  ParamPoly two_g_minus_two() const { return d * delta(); }

  /// Throws ConstraintError when numeric data contradicts ρ ≥ 1 (C -> B is
  /// never unramified) or, for hyperelliptic C over q ≥ 1, ρ ∈ {1, 2}.
  void validate() const;
};

/// g with 2g - 2 = d(2q - 2 + ρ). Rejects numeric inputs giving a
/// non-integral genus.
ParamPoly genus_of_zero_curve(const FibrationGenusData& data);

/// e(C) = 2 - 2g = -d(2q - 2 + ρ).
ParamPoly zero_curve_euler(const FibrationGenusData& data);

}  // namespace chow
