#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chow/ring.hpp"

namespace chow {

/// A vector bundle carried by its rank and Chern classes c_1..c_min(rank, dim).
class BundleClass {
 public:
  /// `chern[i]` is c_{i+1}. Missing entries are zero; entries beyond
  /// min(rank, dim) must vanish. Throws BundleError on degree violations.
  BundleClass(RingPtr ring, unsigned rank, std::vector<ChowClass> chern);

  static BundleClass line(const ChowClass& c1);
  static BundleClass trivial(RingPtr ring, unsigned rank);
  /// Bundle with the given rank whose total Chern class is `total`
  /// (truncated above the rank).
  static BundleClass from_total(unsigned rank, const ChowClass& total);

  const RingPtr& ring() const { return ring_; }
  unsigned rank() const { return rank_; }
  /// c_i; c_0 = 1 and c_i = 0 above min(rank, dim).
  ChowClass chern(unsigned i) const;
  const std::vector<ChowClass>& chern_classes() const { return chern_; }
  ChowClass total_chern() const;

  BundleClass substitute_params(const ParamPoly::Bindings& bindings) const;

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.chern_ == b.chern_;
  }

 private:
  RingPtr ring_;
  unsigned rank_;
  std::vector<ChowClass> chern_;
};

/// Multiplicative inverse of a class with constant term 1.
ChowClass invert_unipotent(const ChowClass& c);

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);
/// Total Chern class of Q in 0 -> sub -> ambient -> Q -> 0, through the ring
/// dimension (not truncated at the rank of Q).
ChowClass quotient_total_chern(const BundleClass& ambient, const BundleClass& sub);
/// Q in 0 -> sub -> ambient -> Q -> 0.
BundleClass whitney_quotient(const BundleClass& ambient, const BundleClass& sub);
/// E ⊗ λ for a degree-one class λ.
BundleClass tensor_line(const BundleClass& e, const ChowClass& lambda);
BundleClass dual(const BundleClass& e);
ChowClass det(const BundleClass& e);

/// Total Segre class s(E) = c(E^∨)^{-1}. With this convention
/// s_k(E) = p_*(ξ^{rank-1+k}) for ξ = O(1) on P(E), so for rank two
/// s_2 = c1² - c2 and s_3 = c1³ - 2c1c2. The other common convention
/// (s = c(E)^{-1}) differs by (-1)^k.
ChowClass total_segre(const BundleClass& e);
ChowClass segre(const BundleClass& e, unsigned k);

/// Projective-bundle structure used for pushforward: the source ring is
/// P(bundle) over the target, with tautological generator `tautological`.
struct PushforwardSpec {
  unsigned fiber_rank;
  std::string tautological;
  BundleClass bundle;
};

/// A morphism source -> target, known through its pullback on generators.
struct MorphismData {
  std::string name;
  RingPtr source;
  RingPtr target;
  std::map<std::string, ChowClass> pullback;  // target generator -> source class
  std::optional<PushforwardSpec> pushforward;
};

/// Checks that every target generator maps to a class in the source ring of
/// the same degree. Throws MorphismError.
MorphismData make_morphism(std::string name, RingPtr source, RingPtr target,
                           std::map<std::string, ChowClass> pullback,
                           std::optional<PushforwardSpec> pushforward = std::nullopt);

/// outer ∘ inner, e.g. compose(pi, p) = pi ∘ p : M -> B. Pullback only.
MorphismData compose(const MorphismData& outer, const MorphismData& inner);

ChowClass pullback_class(const MorphismData& m, const ChowClass& c);
BundleClass pullback_bundle(const MorphismData& m, const BundleClass& e);
/// ξ^j · (base monomial) ↦ s_{j-r+1}(E) · (base monomial).
ChowClass pushforward(const MorphismData& m, const ChowClass& c);

}  // namespace chow
