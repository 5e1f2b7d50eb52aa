#include <gtest/gtest.h>

#include "chow/dsl/report.hpp"
#include "chow/dsl/verify.hpp"
#include "chow/errors.hpp"

using namespace chow::dsl;

namespace {

Report sample() {
  Report r;
  r.selector = "demo";
  r.add({"a", "first", "x = 1", true, "1", "1"});
  r.add({"b", "second \"quoted\"", "", false, "2", "3"});
  return r;
}

TEST(Report, Summary) {
  const Report r = sample();
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(r.failed(), 1u);
  EXPECT_FALSE(r.all_passed());
}

TEST(Report, JsonRoundTrip) {
  const Report r = sample();
  EXPECT_EQ(Report::from_json(r.to_json()), r);
  EXPECT_EQ(Report::from_json(r.to_json(-1)), r);
}

TEST(Report, JsonKeyOrder) {
  const std::string j = sample().to_json();
  const auto pos = [&](const char* k) { return j.find(std::string("\"") + k + "\""); };
  EXPECT_LT(pos("version"), pos("selector"));
  EXPECT_LT(pos("selector"), pos("checks"));
  EXPECT_LT(pos("checks"), pos("summary"));
  EXPECT_LT(pos("id"), pos("description"));
  EXPECT_LT(pos("anchor"), pos("status"));
  EXPECT_LT(pos("expected"), pos("actual"));
}

TEST(Report, RejectsMalformedJson) {
  EXPECT_THROW(Report::from_json("{"), chow::Error);
  EXPECT_THROW(Report::from_json(R"({"version":"v"})"), chow::Error);
  std::string j = sample().to_json();
  j.replace(j.find("\"pass\""), 6, "\"meh\"");
  EXPECT_THROW(Report::from_json(j), chow::Error);
  std::string k = sample().to_json(-1);
  k.replace(k.find("\"total\":2"), 9, "\"total\":3");
  EXPECT_THROW(Report::from_json(k), chow::Error);
}

TEST(Report, Text) {
  const std::string t = sample().to_text();
  EXPECT_NE(t.find("PASS a"), std::string::npos);
  EXPECT_NE(t.find("FAIL b"), std::string::npos);
  EXPECT_NE(t.find("2 checks, 1 passed, 1 failed"), std::string::npos);
}

bool has_passing(const Report& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return c.passed;
  }
  return false;
}

TEST(Verify, AllSelectorsPass) {
  for (const auto& s : verification_selectors()) {
    const Report r = run_verification_suite(s);
    EXPECT_FALSE(r.checks.empty()) << s;
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_EQ(r.selector, s);
  }
}

TEST(Verify, SelectorContents) {
  EXPECT_TRUE(has_passing(run_verification_suite("case-a"), "case-a.bound"));
  EXPECT_TRUE(has_passing(run_verification_suite("thm6"), "thm6.unique"));
  const Report ring = run_verification_suite("ring-identities");
  EXPECT_TRUE(has_passing(ring, "ring.ks-squared.a"));
  EXPECT_TRUE(has_passing(ring, "ring.adjoint-cube.c"));
}

TEST(Verify, AllIsUnionInOrder) {
  std::vector<std::string> ids;
  for (const char* s : {"ring-identities", "case-a", "case-b", "case-c", "thm5", "thm6"}) {
    for (const auto& c : run_verification_suite(s).checks) ids.push_back(c.id);
  }
  std::vector<std::string> all;
  for (const auto& c : run_verification_suite("all").checks) all.push_back(c.id);
  EXPECT_EQ(all, ids);
}

TEST(Verify, DeterministicJson) {
  EXPECT_EQ(run_verification_suite("all").to_json(), run_verification_suite("all").to_json());
  VerifyOptions parallel;
  parallel.workers = 4;
  EXPECT_EQ(run_verification_suite("thm5", parallel).to_json(), run_verification_suite("thm5").to_json());
}

TEST(Verify, UnknownSelector) { EXPECT_THROW(run_verification_suite("case-d"), chow::Error); }

}  // namespace
