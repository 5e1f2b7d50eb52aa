#include <gtest/gtest.h>

#include "chow/errors.hpp"
#include "chow/search.hpp"

using namespace chow;

namespace {

SearchRecord case_a_record(long q, long rho, long x, long d) {
  return SearchRecord{{{"q", q}, {"rho", rho}, {"x", x}, {"D", d}}};
}

TEST(Search, Presets) {
  EXPECT_EQ(parse_preset("thm5"), SearchPreset::CaseAExclusion);
  EXPECT_EQ(parse_preset("thm6"), SearchPreset::CaseBSolution);
  EXPECT_FALSE(parse_preset("thm7").has_value());
  EXPECT_EQ(preset_name(SearchPreset::CaseBSolution), "thm6");
  const SearchSpec s = SearchSpec::thm5();
  EXPECT_EQ(s.x_floor(1), 7);
  EXPECT_EQ(s.x_floor(2), 3);
  EXPECT_EQ(s.x_floor(40), 3);
}

TEST(Search, FaithfulCaseAIsEmpty) {
  const SearchResult r = case_a_search(SearchSpec::thm5());
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(r.tuples_checked, 50L * 10000 * 2);
  ASSERT_TRUE(r.q_cutoff.has_value());
  EXPECT_LE(*r.q_cutoff, 3);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Search, RelaxedFloorWitnesses) {
  SearchSpec s = SearchSpec::thm5();
  s.floor_q1 = false;
  const SearchResult r = case_a_search(s);
  std::vector<SearchRecord> want;
  for (long x = 1; x <= 5; ++x) want.push_back(case_a_record(1, 2, x, 34 - 2 * x));
  EXPECT_EQ(r.witnesses, want);
  EXPECT_EQ(r.witnesses.back(), case_a_record(1, 2, 5, 24));
}

TEST(Search, RhoOneEmptyWithoutFloors) {
  SearchSpec s = SearchSpec::thm5();
  s.rho_values = {1};
  s.floor_q1 = s.floor_general = false;
  EXPECT_TRUE(case_a_search(s).empty());
}

TEST(Search, NegativeDegreeBranchNeedsPositivity) {
  SearchSpec s = SearchSpec::thm5();
  s.floor_q1 = s.floor_general = false;
  s.require_positive_degree = false;
  s.q = {1, 2};
  s.x = {1, 100};
  const SearchResult r = case_a_search(s);
  bool negative = false;
  for (const auto& w : r.witnesses) negative = negative || w.at("D") < 0;
  EXPECT_TRUE(negative);
}

TEST(Search, BoxEnlargementInvariance) {
  for (bool relax : {false, true}) {
    SearchSpec small = SearchSpec::thm5();
    small.floor_q1 = !relax;
    small.q = {1, 10};
    small.x = {1, 200};
    SearchSpec big = small;
    big.q = {1, 80};
    big.x = {1, 20000};
    EXPECT_EQ(case_a_search(small).witnesses, case_a_search(big).witnesses);
  }
}

TEST(Search, WorkerCountDoesNotChangeResult) {
  SearchSpec s = SearchSpec::thm5();
  s.floor_q1 = false;
  const SearchResult one = case_a_search(s);
  for (unsigned w : {2u, 3u, 8u}) {
    s.workers = w;
    const SearchResult many = case_a_search(s);
    EXPECT_EQ(many.witnesses, one.witnesses) << w;
    EXPECT_EQ(many.tuples_checked, one.tuples_checked) << w;
    EXPECT_EQ(many.notes, one.notes) << w;
  }
}

TEST(Search, RejectsBadBoxes) {
  SearchSpec s = SearchSpec::thm5();
  s.x = {10, 1};
  EXPECT_THROW(case_a_search(s), SearchSpecError);
  s = SearchSpec::thm5();
  s.q = {0, 5};
  EXPECT_THROW(case_a_search(s), SearchSpecError);
  s = SearchSpec::thm5();
  s.x = {1, 2'000'000'000};
  EXPECT_THROW(case_a_search(s), SearchSpecError);
  s = SearchSpec::thm5();
  s.rho_values = {};
  EXPECT_THROW(case_a_search(s), SearchSpecError);
}

TEST(Search, CaseBUnique) {
  const SearchResult r = case_b_solve(SearchSpec::thm6());
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], (SearchRecord{{{"rho", 2}, {"l", 1}, {"D", 24}, {"q", 1}, {"g", 4}}}));
}

TEST(Search, CaseBQTwoInfeasible) {
  const Feasibility f = case_b_feasibility(2, 2, 24);
  EXPECT_EQ(f.lhs, 96);
  EXPECT_EQ(f.rhs, 210);
  EXPECT_FALSE(f.feasible);
  EXPECT_TRUE(case_b_feasibility(1, 2, 24).feasible);
}

TEST(Search, CaseBOddRhoHasNoSolution) {
  SearchSpec s = SearchSpec::thm6();
  s.rho_values = {1};
  EXPECT_TRUE(case_b_solve(s).empty());
}

TEST(Search, CaseBDeterministicAcrossWorkers) {
  SearchSpec s = SearchSpec::thm6();
  const SearchResult one = case_b_solve(s);
  s.workers = 4;
  EXPECT_EQ(case_b_solve(s).witnesses, one.witnesses);
}

TEST(Search, RunSearchDispatches) {
  EXPECT_TRUE(run_search(SearchSpec::thm5()).empty());
  EXPECT_EQ(run_search(SearchSpec::thm6()).witnesses.size(), 1u);
}

TEST(Search, RecordFormatting) {
  const SearchRecord r = case_a_record(1, 2, 5, 24);
  EXPECT_EQ(r.to_string(), "(q=1, rho=2, x=5, D=24)");
  EXPECT_EQ(r.at("x"), 5);
  EXPECT_THROW(r.at("y"), Error);
}

}  // namespace
