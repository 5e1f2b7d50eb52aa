// Acceptance criteria AC1..AC8. Prints one [PASS]/[FAIL] line each and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chow/cases.hpp"
#include "chow/double_point.hpp"
#include "chow/errors.hpp"
#include "chow/genus.hpp"
#include "chow/search.hpp"
#include "properties.hpp"

using namespace chow;

namespace {

const ParamPoly q = ParamPoly::symbol("q");
const ParamPoly rho = ParamPoly::symbol("rho");
const ParamPoly x = ParamPoly::symbol("x");
const ParamPoly mu = ParamPoly::symbol("mu");
const ParamPoly l = ParamPoly::symbol("l");
const ParamPoly k = ParamPoly::symbol("k");
const ParamPoly delta = 2 * q - 2 + rho;

// Collects sub-check failures for one criterion.
struct Criterion {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect_eq(const ParamPoly& got, const ParamPoly& want, const std::string& what) {
    if (!(got == want)) failures.push_back(what + ": got " + got.to_string() + ", want " + want.to_string());
  }
};

std::string ac1(Criterion& c) {
  const struct {
    FibrationCase tag;
    long a, b, cc;
  } rows[] = {{FibrationCase::A, 200, 37, 0}, {FibrationCase::B, 168, 21, 0}, {FibrationCase::C, 168, 20, 1}};
  std::string detail;
  for (const auto& row : rows) {
    const BoundResult r = derive_case_bound(row.tag);
    const std::string n(case_name(row.tag));
    c.expect(r.a == row.a && r.b == row.b && r.c == row.cc, "coefficients for case " + n);
    c.expect_eq(r.residual, 0, "residual " + n);
    c.expect_eq(r.reduced_residual, 0, "reduced residual " + n);
    detail += n + "=(" + std::to_string(r.a) + "," + std::to_string(r.b) + "," + std::to_string(r.c) + ") ";
  }
  return detail + "residuals zero";
}

std::string ac2(Criterion& c) {
  const ParamPoly d = segre_degree_case_a(x, mu);
  c.expect_eq(d, 15 * x + 17 * mu, "segre degree");
  c.expect_eq(d.substitute("mu", rho - x), 17 * rho - 2 * x, "after mu := rho - x");
  c.expect_eq(case_a_mu_from_adjunction(), rho - x, "mu from adjunction");
  c.expect_eq(segre_degree_case_a_on_projectivization(x, mu), d, "integral of xi^4");
  return "D = " + d.to_string() + " = " + d.substitute("mu", rho - x).to_string();
}

std::string ac3(Criterion& c) {
  for (FibrationCase tag : {FibrationCase::A, FibrationCase::B, FibrationCase::C}) {
    const CaseBoundInput in = case_bound_input(tag);
    const FiberData& f = fiber_data(tag);
    const std::string n(case_name(tag));
    c.expect_eq(in.ks_squared, 0, "K_S^2 case " + n);
    c.expect_eq(in.adjoint_cube, 0, "(K_Z+H_Z)^3 case " + n);
    c.expect_eq(in.ks_dot_hs, delta * (f.c1_squared - f.d), "K_S.H_S case " + n);
    c.expect_eq(in.chi_oz, 1 - q, "chi(O_Z) case " + n);
    c.expect_eq(in.chi_os, rho, "chi(O_S) case " + n);
  }
  c.expect(fiber_data(FibrationCase::A).c1_squared == 9 && fiber_data(FibrationCase::A).d == 2, "fiber a");
  c.expect(fiber_data(FibrationCase::B).c1_squared == 9 && fiber_data(FibrationCase::B).d == 3, "fiber b");
  c.expect(fiber_data(FibrationCase::C).c1_squared == 8 && fiber_data(FibrationCase::C).d == 2, "fiber c");
  return "K_S^2 = 0, (K_Z+H_Z)^3 = 0, K_S.H_S = 7d/6d/6d";
}

std::string ac4(Criterion& c) {
  for (FibrationCase tag : {FibrationCase::A, FibrationCase::B}) {
    const long d = fiber_data(tag).d;
    const FibrationGenusData g{d, q, rho, false};
    const ParamPoly built = blowup_euler(p2_bundle_model(q, x).euler, zero_curve_euler(g));
    c.expect_eq(built, 6 * (1 - q) - d * delta, std::string("blowup euler ") + std::string(case_name(tag)));
    c.expect_eq(case_bound_input(tag).euler_z, built, "bound input euler");
  }
  const ParamPoly fib = quadric_fibration_model(q, k).euler;
  c.expect_eq(fib, 4 * (2 - 2 * q - k) + 3 * k, "quadric fibration euler");
  const ParamPoly built_c = blowup_euler(fib, zero_curve_euler({fiber_data(FibrationCase::C).d, q, rho, false}));
  c.expect_eq(built_c, 8 * (1 - q) - k - 2 * delta, "blowup euler c");
  c.expect_eq(case_bound_input(FibrationCase::C).euler_z, built_c, "bound input euler c");
  return "e(Z) a/b/c match";
}

std::string ac5(Criterion& c) {
  const CaseBRhoForm f = case_b_invariants_in_rho(true);
  c.expect_eq(f.c1_cubed, 27 * rho, "c1^3");
  c.expect_eq(f.c1c2, 9 * rho - 3 * l, "c1c2");
  c.expect(f.rho && *f.rho == 2 * l, "rho = 2l");
  const CaseBInvariants inv = case_b_invariants(x, ParamPoly::symbol("v"), l, true);
  c.expect_eq(inv.c1_cubed, 27 * inv.rho, "c1^3 via direct invariants");
  const SearchResult r = case_b_solve(SearchSpec::thm6());
  const SearchRecord want{{{"rho", 2}, {"l", 1}, {"D", 24}, {"q", 1}, {"g", 4}}};
  c.expect(r.witnesses.size() == 1 && r.witnesses[0] == want, "unique record");
  const Feasibility q2 = case_b_feasibility(2, 2, 24);
  c.expect(!q2.feasible && q2.lhs == 96 && q2.rhs == 210, "q = 2 infeasible");
  return (r.witnesses.empty() ? std::string("none") : r.witnesses[0].to_string()) + ", q=2: " +
         std::to_string(q2.lhs) + " < " + std::to_string(q2.rhs);
}

std::string ac6(Criterion& c) {
  const SearchSpec faithful = SearchSpec::thm5();
  c.expect(faithful.q.lo == 1 && faithful.q.hi == 50 && faithful.x.lo == 1 && faithful.x.hi == 10000,
           "default box");
  const SearchResult r = case_a_search(faithful);
  c.expect(r.empty(), "faithful preset empty");
  SearchSpec relaxed = faithful;
  relaxed.floor_q1 = false;
  const SearchResult w = case_a_search(relaxed);
  const SearchRecord want{{{"q", 1}, {"rho", 2}, {"x", 5}, {"D", 24}}};
  bool found = false;
  for (const auto& rec : w.witnesses) found = found || rec == want;
  c.expect(found, "relaxed witness (1, 2, 5, 24)");
  SearchSpec rho1 = faithful;
  rho1.rho_values = {1};
  rho1.floor_q1 = rho1.floor_general = false;
  c.expect(case_a_search(rho1).empty(), "rho = 1 without floors empty");
  return std::to_string(r.tuples_checked) + " tuples, relaxed witness " + want.to_string();
}

std::string ac7(Criterion& c) {
  const props::Outcome outcomes[] = {
      props::ring_axioms_vs_table(1000, 1),   props::normalize_idempotence_vs_table(1000, 2),
      props::whitney(200, 3),                 props::segre_times_dual_chern(200, 4),
      props::projection_formula(200, 5),      props::pushforward_grothendieck(200, 6),
      props::twist_det(200, 7),               props::substitution_oracle(200, 8),
  };
  long total = 0;
  for (const auto& o : outcomes) {
    total += o.cases;
    c.expect(o.ok(), o.name + " (" + std::to_string(o.failures) + " failures; " + o.first_failure + ")");
  }
  return std::to_string(total) + " randomized cases";
}

std::string ac8(Criterion& c) {
  c.expect_eq(genus_of_zero_curve({3, 1, 2, true}), 4, "g at (3, 1, 2)");
  auto rejects = [](FibrationGenusData g) {
    try {
      genus_of_zero_curve(g);
      return false;
    } catch (const ConstraintError&) {
      return true;
    }
  };
  c.expect(rejects({3, 1, 0, true}), "rho = 0 rejected");
  c.expect(rejects({3, 1, 1, false}), "odd parity rejected");
  return "g = 4, rho = 0 and odd parity rejected";
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const struct {
    const char* id;
    const char* title;
    std::function<std::string(Criterion&)> run;
  } criteria[] = {
      {"AC1", "double point bound coefficients", ac1},
      {"AC2", "case (a) degree by two routes", ac2},
      {"AC3", "surface and threefold intersection numbers", ac3},
      {"AC4", "Euler number bookkeeping", ac4},
      {"AC5", "case (b) invariants and unique solution", ac5},
      {"AC6", "case (a) exclusion search", ac6},
      {"AC7", "randomized property suites", ac7},
      {"AC8", "genus of the zero curve", ac8},
  };
  const auto start = Clock::now();
  int failed = 0;
  for (const auto& cr : criteria) {
    Criterion c;
    const auto t0 = Clock::now();
    std::string detail;
    try {
      detail = cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %s %s: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", cr.id, cr.title,
                ok ? detail.c_str() : c.failures.front().c_str(), ms);
    for (std::size_t i = 1; i < c.failures.size(); ++i) std::printf("       also: %s\n", c.failures[i].c_str());
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%d/8 criteria passed in %.2f s\n", 8 - failed, total);
  return failed == 0 ? 0 : 1;
}
