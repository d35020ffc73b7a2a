#include <sepperm/verify.hpp>

#include <gtest/gtest.h>

using namespace sepperm;

namespace {

VerifyContext& shared() {
  static VerifyContext ctx(VerifyOptions{.order = 8, .small_order = 14, .enum_order = 7, .exhaustive_max_n = 7,
                                         .conjecture_max_n = 10});
  return ctx;
}

}  // namespace

TEST(Verify, EveryRegisteredCheckPassesAtReducedOrders) {
  for (const NamedCheck& c : available_checks()) {
    for (const CheckReport& r : c.run(shared())) {
      EXPECT_TRUE(r.pass) << r.id << ": " << r.witness;
      EXPECT_TRUE(r.witness.empty()) << r.id;
    }
  }
}

TEST(Verify, CheckIdsAreUnique) {
  std::set<std::string> ids;
  for (const NamedCheck& c : available_checks()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(Verify, CorruptedPeakCountDetected) {
  const CheckReport r = verify_schroeder_identities(shared(), 8, [](int n, int k) {
    return dyck_peak_count(n, k) + ((n == 4 && k == 2) ? 1 : 0);
  });
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.first_failure, 4);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Verify, PerturbedAscDesSeriesDetected) {
  const CheckReport r =
      verify_asc_des_relation(shared(), 8, SeriesPerturbation{5, Monomial::of(Var::p, 2) * Monomial::of(Var::q, 2)});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.first_failure, 5);
}

TEST(Verify, CorruptedSnippetDetected) {
  auto snip = reference::series_snippets()[1];
  snip.coefficients[2] = "x^2y^2 + xy^3 + 2xy^2";
  const CheckReport r = verify_series_expansions(shared(), {snip});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.first_failure, 3);
}

TEST(Verify, NegativeControlsRecordEveryDetection) {
  const CheckReport r = verify_negative_controls(shared());
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_NE(r.note.find("corrupted C_{4,2}"), std::string::npos);
  EXPECT_NE(r.note.find("binding-swapped pair"), std::string::npos);
}

TEST(Verify, UnimodalityAnalysis) {
  const std::vector<Integer> table4_row4 = {0, 5, 5, 1};
  const Unimodality a = analyze_unimodality(table4_row4);
  EXPECT_TRUE(a.unimodal);
  EXPECT_FALSE(a.strict);
  EXPECT_EQ(a.peak, 2);
  const std::vector<Integer> row = {394, 504, 461, 305, 120, 21, 1};
  const Unimodality b = analyze_unimodality(row);
  EXPECT_TRUE(b.unimodal && b.strict);
  EXPECT_EQ(b.peak, 2);
  const std::vector<Integer> dip = {3, 1, 2};
  EXPECT_FALSE(analyze_unimodality(dip).unimodal);
  EXPECT_TRUE(analyze_unimodality(std::vector<Integer>{}).unimodal);
}

TEST(Verify, UnimodalityClaimsHoldToTwelve) {
  VerifyContext ctx;
  for (const auto& claim : unimodality_claims()) {
    const CheckReport r = check_unimodality_claim(ctx, claim, 12);
    EXPECT_TRUE(r.pass) << claim.id << ": " << r.witness;
  }
}

TEST(Verify, WrongPeakIsReported) {
  auto claim = unimodality_claims()[0];
  claim.peak = 3;
  const CheckReport r = check_unimodality_claim(shared(), claim, 8);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Verify, ReportsAreDeterministic) {
  VerifyContext a, b;
  const CheckReport ra = verify_equidistribution(a, 6), rb = verify_equidistribution(b, 6);
  EXPECT_EQ(ra.pass, rb.pass);
  EXPECT_EQ(ra.note, rb.note);
  EXPECT_EQ(ra.witness, rb.witness);
}

TEST(Verify, ExceptionsBecomeFailures) {
  const CheckReport r = detail::guarded("boom", [](detail::ReportBuilder&) { throw std::runtime_error("bad"); });
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("bad"), std::string::npos);
}
