#include "chow/models.hpp"

#include "chow/errors.hpp"

namespace chow {

std::string_view case_name(FibrationCase c) {
  switch (c) {
    case FibrationCase::A: return "a";
    case FibrationCase::B: return "b";
    case FibrationCase::C: return "c";
  }
  return "?";
}

std::optional<FibrationCase> parse_case(std::string_view name) {
  if (name == "a") return FibrationCase::A;
  if (name == "b") return FibrationCase::B;
  if (name == "c") return FibrationCase::C;
  return std::nullopt;
}

const FiberData& fiber_data(FibrationCase c) {
  // e(cone) = 3: a quadric cone has one isolated singular point.
  static const FiberData a{FibrationCase::A, FiberType::ProjectivePlane, 2, 9, 3, std::nullopt};
  static const FiberData b{FibrationCase::B, FiberType::ProjectivePlane, 3, 9, 3, std::nullopt};
  static const FiberData cc{FibrationCase::C, FiberType::Quadric, 2, 8, 4, 3};
  switch (c) {
    case FibrationCase::A: return a;
    case FibrationCase::B: return b;
    case FibrationCase::C: return cc;
  }
  return a;
}

FiberModel fiber_model(FibrationCase c) {
  if (c == FibrationCase::C) {
    RingSpec spec;
    spec.name = "Q2";
    spec.generators = {{"h1", 1}, {"h2", 1}};
    spec.dimension = 2;
    spec.rules = {{Monomial{{2, 0}}, {}}, {Monomial{{0, 2}}, {}}};
    spec.point = Monomial{{1, 1}};
    RingPtr ring = declare_ring(std::move(spec));
    const ChowClass h = ChowClass::generator(ring, "h1") + ChowClass::generator(ring, "h2");
    return {ring, whitney_sum(BundleClass::line(h), BundleClass::line(h))};
  }

  RingSpec spec;
  spec.name = "P2";
  spec.generators = {{"h", 1}};
  spec.dimension = 2;
  spec.point = Monomial{{2}};
  RingPtr ring = declare_ring(std::move(spec));
  const ChowClass h = ChowClass::generator(ring, "h");
  if (c == FibrationCase::A) {
    return {ring, whitney_sum(BundleClass::line(2 * h), BundleClass::line(h))};
  }
  // Euler sequence 0 -> O -> O(1)^3 -> T -> 0.
  const BundleClass o1 = BundleClass::line(h);
  return {ring, whitney_quotient(whitney_sum(whitney_sum(o1, o1), o1),
                                 BundleClass::trivial(ring, 1))};
}

const MorphismData& VarietyModel::morphism(std::string_view mname) const {
  for (const auto& m : morphisms) {
    if (m.name == mname) return m;
  }
  throw MorphismError("model '" + name + "' has no morphism '" + std::string(mname) + "'");
}

const MorphismData* VarietyModel::morphism_to(const RingPtr& target) const {
  for (const auto& m : morphisms) {
    if (m.target == target) return &m;
  }
  return nullptr;
}

VarietyModel curve_model(const ParamPoly& q) {
  RingSpec spec;
  spec.name = "B";
  spec.generators = {{"pt", 1}};
  spec.dimension = 1;
  spec.rules = {{Monomial{{2}}, {}}};
  spec.point = Monomial{{1}};
  RingPtr ring = declare_ring(std::move(spec));

  VarietyModel model;
  model.name = "B";
  model.dim = 1;
  model.ring = ring;
  model.canonical = (2 * q - 2) * ChowClass::generator(ring, "pt");
  model.euler = 2 - 2 * q;
  return model;
}

VarietyModel p2_bundle_model(const ParamPoly& q, const ParamPoly& x) {
  return p2_bundle_model(curve_model(q), x);
}

VarietyModel p2_bundle_model(const VarietyModel& base_curve, const ParamPoly& x) {
  if (base_curve.dim != 1 || !base_curve.ring || !base_curve.canonical) {
    throw RingSpecError("p2_bundle_model: base must be a curve model");
  }
  const RingPtr& b = base_curve.ring;

  RingSpec spec;
  spec.name = "X";
  spec.generators = {{"H", 1}, {"F", 1}};
  spec.dimension = 3;
  // Grothendieck relation H³ - c1(G)H² = 0 with c1(G) = x·F.
  spec.rules = {{Monomial{{0, 2}}, {}}, {Monomial{{3, 0}}, {{Monomial{{2, 1}}, x}}}};
  spec.point = Monomial{{2, 1}};
  RingPtr ring = declare_ring(std::move(spec));

  const ChowClass pt = ChowClass::generator(b, "pt");
  const BundleClass g(b, 3, {x * pt});
  MorphismData pi = make_morphism("pi", ring, b, {{"pt", ChowClass::generator(ring, "F")}},
                                  PushforwardSpec{3, "H", g});

  VarietyModel model;
  model.name = "X";
  model.dim = 3;
  model.ring = ring;
  // K_X = -3H + π*(K_B + det G).
  model.canonical = -3 * ChowClass::generator(ring, "H") +
                    pullback_class(pi, *base_curve.canonical + det(g));
  model.euler = 3 * base_curve.euler;
  model.morphisms.push_back(std::move(pi));
  return model;
}

VarietyModel quadric_fibration_model(const ParamPoly& q, const ParamPoly& k) {
  const FiberData& fd = fiber_data(FibrationCase::C);
  VarietyModel model;
  model.name = "X";
  model.dim = 3;
  // e(X) = e(X - kF') + k·e(F') with F' a quadric cone.
  model.euler = fd.euler_fiber * (2 - 2 * q - k) + ParamPoly(*fd.euler_singular_fiber) * k;
  model.fiber = fd;
  return model;
}

VarietyModel projectivization_model(const VarietyModel& base, const BundleClass& e) {
  if (!base.ring || !base.canonical || base.dim != 3) {
    throw RingSpecError("projectivization_model: base must be a threefold with a Chow ring");
  }
  if (e.rank() != 2) {
    throw BundleError("projectivization_model: only rank-2 bundles are supported (rank " +
                      std::to_string(e.rank()) + ")");
  }
  if (e.ring() != base.ring) throw RingMismatchError("projectivization_model: bundle not on base");
  const RingDescriptor& xr = *base.ring;

  auto lift = [](const Monomial& m, unsigned xi_power) {
    Monomial out;
    out.exps.reserve(m.exps.size() + 1);
    out.exps.push_back(xi_power);
    out.exps.insert(out.exps.end(), m.exps.begin(), m.exps.end());
    return out;
  };

  RingSpec spec;
  spec.name = "M";
  spec.generators.push_back({"xi", 1});
  for (const auto& g : xr.generators()) spec.generators.push_back(g);
  spec.dimension = xr.dimension() + 1;
  for (const auto& rule : xr.rules()) {
    RawTerms rhs;
    for (const auto& [m, c] : rule.rhs) rhs.emplace(lift(m, 0), c);
    spec.rules.push_back({lift(rule.lhs, 0), std::move(rhs)});
  }
  RawTerms grothendieck;
  const ChowClass c1 = e.chern(1);
  const ChowClass c2 = e.chern(2);
  for (const auto& [m, c] : c1.terms()) grothendieck[lift(m, 1)] += c;
  for (const auto& [m, c] : c2.terms()) grothendieck[lift(m, 0)] -= c;
  spec.rules.push_back({lift(xr.unit(), 2), std::move(grothendieck)});
  spec.point = lift(xr.point(), 1);
  RingPtr ring = declare_ring(std::move(spec));

  std::map<std::string, ChowClass> table;
  for (const auto& g : xr.generators()) table.emplace(g.name, ChowClass::generator(ring, g.name));
  MorphismData p = make_morphism("p", ring, base.ring, std::move(table),
                                 PushforwardSpec{2, "xi", e});

  VarietyModel model;
  model.name = "M";
  model.dim = 4;
  model.ring = ring;
  const ChowClass xi = ChowClass::generator(ring, "xi");
  model.canonical = -2 * xi + pullback_class(p, *base.canonical + det(e));
  model.euler = 2 * base.euler;
  for (const auto& m : base.morphisms) model.morphisms.push_back(compose(m, p));
  model.morphisms.insert(model.morphisms.begin(), std::move(p));
  return model;
}

ParamPoly blowup_euler(const ParamPoly& euler_x, const ParamPoly& euler_c) {
  return euler_x + euler_c;
}

}  // namespace chow
