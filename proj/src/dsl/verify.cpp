#include "chow/dsl/verify.hpp"

#include <algorithm>
#include <functional>

#include "chow/cases.hpp"
#include "chow/double_point.hpp"
#include "chow/genus.hpp"
#include "chow/search.hpp"

namespace chow::dsl {

namespace {

const ParamPoly q = ParamPoly::symbol("q");
const ParamPoly rho = ParamPoly::symbol("rho");
const ParamPoly x = ParamPoly::symbol("x");
const ParamPoly mu = ParamPoly::symbol("mu");
const ParamPoly k = ParamPoly::symbol("k");
const ParamPoly l = ParamPoly::symbol("l");
const ParamPoly v = ParamPoly::symbol("v");
const ParamPoly delta = 2 * q - 2 + rho;

struct Outcome {
  bool passed;
  std::string expected;
  std::string actual;
};

class Suite {
 public:
  explicit Suite(Report& r) : report_(r) {}

  // Exceptions turn into failed entries.
  void check(std::string id, std::string description, std::string anchor,
             const std::function<Outcome()>& body) {
    Check c{std::move(id), std::move(description), std::move(anchor), false, "", ""};
    try {
      Outcome o = body();
      c.passed = o.passed;
      c.expected = std::move(o.expected);
      c.actual = std::move(o.actual);
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    report_.add(std::move(c));
  }

  void poly(std::string id, std::string description, std::string anchor,
            const std::function<ParamPoly()>& actual, const ParamPoly& expected) {
    check(std::move(id), std::move(description), std::move(anchor), [&] {
      const ParamPoly a = actual();
      return Outcome{a == expected, expected.to_string(), a.to_string()};
    });
  }

 private:
  Report& report_;
};

std::string triple(long a, long b, long c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::string records(const SearchResult& r) {
  if (r.witnesses.empty()) return "no witnesses";
  std::string out;
  for (const auto& w : r.witnesses) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

const char* bound_anchor(FibrationCase c) {
  switch (c) {
    case FibrationCase::A: return "D(D-20) >= 200(q-1) + 37rho";
    case FibrationCase::B: return "D(D-20) >= 168(q-1) + 21rho";
    case FibrationCase::C: return "D(D-20) >= 168(q-1) + 20rho + k";
  }
  return "";
}

void bound_checks(Suite& s, FibrationCase c, long a, long b, long cc) {
  const std::string tag = std::string("case-") + std::string(case_name(c));
  s.check(tag + ".bound", "bound coefficients (A, B, C) from the double point formula",
          bound_anchor(c), [&] {
            const BoundResult r = derive_case_bound(c);
            return Outcome{r.a == a && r.b == b && r.c == cc, triple(a, b, cc),
                           triple(r.a, r.b, r.c)};
          });
  s.poly(tag + ".residual", "D(D-20) minus the bound is identically zero",
         "e(Z) - 48chi(O_Z) + 84chi(O_S) - 11K_S^2 - 17K_S.H_S - ...",
         [&] { return derive_case_bound(c).residual; }, 0);
  s.poly(tag + ".reduced-residual", "general and reduced double point forms agree",
         "K_S^2 = 0, (K_Z+H_Z)^3 = 0", [&] { return derive_case_bound(c).reduced_residual; }, 0);
}

void euler_check(Suite& s, FibrationCase c) {
  const FiberData& f = fiber_data(c);
  const ParamPoly expected = c == FibrationCase::C ? 8 * (1 - q) - k - 2 * delta
                                                   : 6 * (1 - q) - f.d * delta;
  const char* anchor = c == FibrationCase::C ? "e(Z) = 8(1-q) - k - 2(2q-2+rho)"
                                             : "e(Z) = 6(1-q) - d(2q-2+rho)";
  s.poly(std::string("case-") + std::string(case_name(c)) + ".euler-z",
         "Euler number of the blown-up threefold", anchor,
         [&] { return case_bound_input(c).euler_z; }, expected);
}

// ---------------------------------------------------------------------------

void ring_identities(Suite& s) {
  s.check("ring.p2-bundle-relation", "H^3 = x H^2F, F^2 = 0, integral of H^2F is 1",
          "H^3 = x H^2 F", [] {
            const VarietyModel m = p2_bundle_model(q, x);
            const ChowClass h = ChowClass::generator(m.ring, "H");
            const ChowClass f = ChowClass::generator(m.ring, "F");
            const bool ok = h.pow(3) == x * h.pow(2) * f && (f * f).is_zero() &&
                            integrate(h.pow(2) * f) == ParamPoly(1);
            return Outcome{ok, "x*H^2*F, 0, 1",
                           h.pow(3).to_string() + ", " + (f * f).to_string() + ", " +
                               integrate(h.pow(2) * f).to_string()};
          });
  s.check("ring.grothendieck", "xi^2 = c1(E) xi - c2(E) on the projectivization",
          "xi^2 - c1 xi + c2 = 0", [] {
            const CaseAModel a = case_a_model(q, x, mu);
            const VarietyModel m = projectivization_model(a.threefold, a.e);
            const MorphismData& p = m.morphism("p");
            const ChowClass xi = ChowClass::generator(m.ring, "xi");
            const ChowClass rel = xi * xi - pullback_class(p, a.e.chern(1)) * xi +
                                  pullback_class(p, a.e.chern(2));
            return Outcome{rel.is_zero(), "0", rel.to_string()};
          });
  for (FibrationCase c : {FibrationCase::A, FibrationCase::B, FibrationCase::C}) {
    const std::string n(case_name(c));
    const FiberData& f = fiber_data(c);
    s.poly("ring.ks-squared." + n, "K_S^2 vanishes in case " + n, "K_S^2 = 0",
           [&] { return case_bound_input(c).ks_squared; }, 0);
    s.poly("ring.adjoint-cube." + n, "(K_Z + H(E)_Z)^3 vanishes in case " + n,
           "(K_Z + H(E)_Z)^3 = 0", [&] { return case_bound_input(c).adjoint_cube; }, 0);
    s.poly("ring.ks-dot-hs." + n,
           "K_S.H(E)_S with c1(E_F)^2 = " + std::to_string(f.c1_squared) +
               ", d = " + std::to_string(f.d),
           "K_S.H(E)_S = (2q-2+rho)(c1(E_F)^2 - d)", [&] { return case_bound_input(c).ks_dot_hs; },
           delta * (f.c1_squared - f.d));
  }
  s.poly("ring.chi-oz", "holomorphic Euler characteristic of Z (closed form)", "chi(O_Z) = 1-q",
         [] { return case_bound_input(FibrationCase::A).chi_oz; }, 1 - q);
  s.poly("ring.chi-os", "holomorphic Euler characteristic of S (closed form)", "chi(O_S) = rho",
         [] { return case_bound_input(FibrationCase::A).chi_os; }, rho);
}

void case_a(Suite& s) {
  bound_checks(s, FibrationCase::A, 200, 37, 0);
  euler_check(s, FibrationCase::A);
  s.poly("case-a.segre-degree", "D = c1^3 - 2c1c2 on the P2-bundle", "D = 15x + 17mu",
         [] { return segre_degree_case_a(x, mu); }, 15 * x + 17 * mu);
  s.poly("case-a.mu", "adjunction forces mu = rho - x", "mu = rho - x",
         [] { return case_a_mu_from_adjunction(); }, rho - x);
  s.poly("case-a.degree-in-rho", "D after mu := rho - x", "D = 17rho - 2x",
         [] { return segre_degree_case_a(x, mu).substitute("mu", rho - x); }, 17 * rho - 2 * x);
  s.check("case-a.projectivization", "integral of xi^4 agrees with the Segre route",
          "D = xi^4", [] {
            const ParamPoly a = segre_degree_case_a_on_projectivization(x, mu);
            const ParamPoly b = segre_degree_case_a(x, mu);
            return Outcome{a == b, b.to_string(), a.to_string()};
          });
  s.poly("case-a.degree-at-witness", "D at x = 5, rho = 2", "17*2 - 2*5 = 24",
         [] {
           return segre_degree_case_a(x, mu).substitute("mu", rho - x).substitute(
               make_bindings({{"x", 5}, {"rho", 2}}));
         },
         24);
}

void case_b(Suite& s) {
  bound_checks(s, FibrationCase::B, 168, 21, 0);
  euler_check(s, FibrationCase::B);
  s.poly("case-b.rho", "rho from K_X + det E", "rho = x + v - l",
         [] { return case_b_invariants(x, v, l, false).rho; }, x + v - l);
  s.check("case-b.c2", "second Chern class of E", "c2(E) = 3H^2 + (2v-3l)HF", [] {
    const CaseBInvariants inv = case_b_invariants(x, v, l, false);
    const RingPtr& r = inv.c2_e.ring();
    const ChowClass h = ChowClass::generator(r, "H");
    const ChowClass f = ChowClass::generator(r, "F");
    const ChowClass want = 3 * h * h + (2 * v - 3 * l) * h * f;
    return Outcome{inv.c2_e == want, want.to_string(), inv.c2_e.to_string()};
  });
  s.poly("case-b.obstruction", "rank condition", "x + v = 3l",
         [] { return case_b_invariants(x, v, l, false).rank_obstruction; }, x + v - 3 * l);
  const auto form = [] { return case_b_invariants_in_rho(true); };
  s.poly("case-b.c1-cubed", "c1(E)^3 under x + v = 3l", "c1^3 = 27rho",
         [&] { return form().c1_cubed; }, 27 * rho);
  s.poly("case-b.c1c2", "c1(E)c2(E) under x + v = 3l", "c1c2 = 9rho - 3l",
         [&] { return form().c1c2; }, 9 * rho - 3 * l);
  s.poly("case-b.degree", "D = c1^3 - 2c1c2 under x + v = 3l", "D = 9rho + 6l",
         [&] { return form().degree; }, 9 * rho + 6 * l);
  s.poly("case-b.rho-even", "rho forced by the rank condition", "rho = 2l",
         [&] { return form().rho.value_or(ParamPoly::symbol("?")); }, 2 * l);
  s.check("case-b.numeric", "c1^3, c1c2, D at rho = 2, l = 1", "54, 15, 24", [&] {
    const auto b = make_bindings({{"rho", 2}, {"l", 1}});
    const CaseBRhoForm f = form();
    const std::string got = f.c1_cubed.substitute(b).to_string() + ", " +
                            f.c1c2.substitute(b).to_string() + ", " +
                            f.degree.substitute(b).to_string();
    return Outcome{got == "54, 15, 24", "54, 15, 24", got};
  });
  s.poly("case-b.unconstrained-l0", "l = 0 probe without the rank condition", "D = 9rho",
         [] {
           const CaseBInvariants inv = case_b_invariants(x, v, l, false);
           const ParamPoly rho_l0 = inv.rho.substitute("l", 0);
           const ParamPoly d_l0 = inv.degree.substitute("l", 0);
           return d_l0 - 9 * rho_l0;
         },
         0);
}

void case_c(Suite& s) {
  bound_checks(s, FibrationCase::C, 168, 20, 1);
  euler_check(s, FibrationCase::C);
  s.poly("case-c.fibration-euler", "quadric fibration with k singular fibres",
         "e(X) = 4(2-2q-k) + 3k", [] { return quadric_fibration_model(q, k).euler; },
         4 * (2 - 2 * q - k) + 3 * k);
}

void genus_checks(Suite& s) {
  s.poly("genus.g4", "genus of the zero curve at d = 3, q = 1, rho = 2",
         "2g - 2 = d(2q - 2 + rho)",
         [] { return genus_of_zero_curve({3, 1, 2, true}); }, 4);
  s.check("genus.rejects-rho0", "rho = 0 is rejected", "rho >= 1", [] {
    try {
      genus_of_zero_curve({3, 1, 0, true});
      return Outcome{false, "ConstraintError", "accepted"};
    } catch (const ConstraintError&) {
      return Outcome{true, "ConstraintError", "ConstraintError"};
    }
  });
  s.check("genus.rejects-odd", "odd d(2q-2+rho) is rejected", "2g - 2 even", [] {
    try {
      genus_of_zero_curve({3, 1, 1, false});
      return Outcome{false, "ConstraintError", "accepted"};
    } catch (const ConstraintError&) {
      return Outcome{true, "ConstraintError", "ConstraintError"};
    }
  });
}

void thm5(Suite& s, const VerifyOptions& o) {
  SearchSpec base = SearchSpec::thm5();
  base.q.hi = o.qmax;
  base.x.hi = o.xmax;
  base.workers = o.workers;
  s.check("thm5.faithful-empty", "case (a) search with both degree floors",
          "D(D-20) >= 200(q-1) + 37rho, D = 17rho - 2x", [&] {
            const SearchResult r = case_a_search(base);
            return Outcome{r.empty(), "no witnesses", records(r)};
          });
  s.check("thm5.cutoff", "q beyond which the bound is unreachable in the box",
          "200(q-1) + 37 > max D(D-20)", [&] {
            const SearchResult r = case_a_search(base);
            const std::string got = r.q_cutoff ? "q >= " + std::to_string(*r.q_cutoff) : "none";
            return Outcome{r.q_cutoff.has_value() && *r.q_cutoff <= 3, "q >= 3", got};
          });
  SearchSpec relaxed = base;
  relaxed.floor_q1 = false;
  s.check("thm5.relaxed-witness", "without the q = 1 floor the boundary witness appears",
          "x <= 5 at q = 1", [&] {
            const SearchResult r = case_a_search(relaxed);
            const SearchRecord want{{{"q", 1}, {"rho", 2}, {"x", 5}, {"D", 24}}};
            const bool has = std::find(r.witnesses.begin(), r.witnesses.end(), want) !=
                             r.witnesses.end();
            long xmax_found = 0;
            for (const auto& w : r.witnesses) xmax_found = std::max(xmax_found, w.at("x"));
            return Outcome{has && xmax_found == 5, want.to_string() + " with maximal x", records(r)};
          });
  SearchSpec rho1 = base;
  rho1.rho_values = {1};
  rho1.floor_q1 = false;
  rho1.floor_general = false;
  s.check("thm5.rho1-empty", "rho = 1 gives nothing even without floors", "D <= 15 < 22", [&] {
    const SearchResult r = case_a_search(rho1);
    return Outcome{r.empty(), "no witnesses", records(r)};
  });
  s.check("thm5.box-invariance", "doubling the box leaves the relaxed witnesses unchanged",
          "monotone in D for D >= 10", [&] {
            SearchSpec bigger = relaxed;
            bigger.q.hi *= 2;
            bigger.x.hi *= 2;
            const std::string a = records(case_a_search(relaxed));
            const std::string b = records(case_a_search(bigger));
            return Outcome{a == b, a, b};
          });
}

void thm6(Suite& s, const VerifyOptions& o) {
  SearchSpec base = SearchSpec::thm6();
  base.q.hi = o.qmax;
  base.workers = o.workers;
  s.check("thm6.unique", "case (b) admits exactly one record", "rho = 2l, D = 24", [&] {
    const SearchResult r = case_b_solve(base);
    const SearchRecord want{{{"rho", 2}, {"l", 1}, {"D", 24}, {"q", 1}, {"g", 4}}};
    return Outcome{r.witnesses.size() == 1 && r.witnesses[0] == want, want.to_string(),
                   records(r)};
  });
  s.check("thm6.q2-infeasible", "q = 2 fails the case (b) bound", "96 < 210", [] {
    const Feasibility f = case_b_feasibility(2, 2, 24);
    const std::string got = std::to_string(f.lhs) + (f.feasible ? " >= " : " < ") +
                            std::to_string(f.rhs);
    return Outcome{!f.feasible && f.lhs == 96 && f.rhs == 210, "96 < 210", got};
  });
  SearchSpec rho1 = base;
  rho1.rho_values = {1};
  s.check("thm6.rho1-none", "rho = 1 is odd, so no solution", "rho = 2l", [&] {
    const SearchResult r = case_b_solve(rho1);
    return Outcome{r.empty(), "no witnesses", records(r)};
  });
  genus_checks(s);
}

}  // namespace

const std::vector<std::string>& verification_selectors() {
  static const std::vector<std::string> s{"all",    "case-a", "case-b",         "case-c",
                                          "thm5",   "thm6",   "ring-identities"};
  return s;
}

bool is_verification_selector(std::string_view s) {
  const auto& all = verification_selectors();
  return std::find(all.begin(), all.end(), s) != all.end();
}

Report run_verification_suite(std::string_view selector, const VerifyOptions& options) {
  if (!is_verification_selector(selector)) {
    throw Error("unknown suite '" + std::string(selector) + "'");
  }
  Report report;
  report.selector = std::string(selector);
  Suite s(report);
  const bool all = selector == "all";
  if (all || selector == "ring-identities") ring_identities(s);
  if (all || selector == "case-a") case_a(s);
  if (all || selector == "case-b") case_b(s);
  if (all || selector == "case-c") case_c(s);
  if (all || selector == "thm5") thm5(s, options);
  if (all || selector == "thm6") thm6(s, options);
  return report;
}

}  // namespace chow::dsl
