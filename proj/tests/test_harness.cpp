#include "atnlab/harness.hpp"

#include <gtest/gtest.h>

using namespace atnlab;

namespace {

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.instance == name) return r;
  throw std::runtime_error("no instance " + name);
}

template <class T>
std::optional<T> diag(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.diagnostics)
    if (k == key && std::holds_alternative<T>(v)) return std::get<T>(v);
  return std::nullopt;
}

}  // namespace

TEST(Claims, Formulas) {
  EXPECT_EQ(claimed_value(ClaimId::thm1, {{"n", 2}}).claimed, 2);
  EXPECT_EQ(claimed_value(ClaimId::thm1, {{"n", 4}}).claimed, 3);
  EXPECT_EQ(claimed_value(ClaimId::cor2, {{"n", 3}}).claimed, 3);
  EXPECT_EQ(claimed_value(ClaimId::thm2, {{"m", 3}, {"n", 6}}).claimed, 3);

  const TheoremClaim t3 = claimed_value(ClaimId::thm3, {{"delta", 2}});
  EXPECT_EQ(t3.claimed, 1);
  EXPECT_EQ(t3.claimed_alt, 2);

  const TheoremClaim t4 = claimed_value(ClaimId::thm4, {{"k", 3}, {"n", 2}});
  EXPECT_EQ(t4.claimed, 2);
  EXPECT_EQ(t4.claimed_alt, 3);

  EXPECT_EQ(claimed_value(ClaimId::thm5, {{"n", 4}}).claimed, 3);

  const TheoremClaim t6 = claimed_value(ClaimId::thm6, {{"n", 4}, {"delta", 2}});
  EXPECT_EQ(t6.claimed, 3);
  EXPECT_EQ(t6.claimed_alt, 2);
  EXPECT_EQ(t6.claimed_proof, 1);

  const TheoremClaim ct = claimed_value(ClaimId::cor_total, {{"order", 3}, {"delta", 2}, {"one_factorizable", 0}});
  EXPECT_EQ(ct.claimed, 4);
  EXPECT_EQ(ct.relation, Relation::at_most);
  EXPECT_FALSE(ct.in_hypothesis);
  EXPECT_TRUE(claimed_value(ClaimId::cor_total, {{"order", 4}, {"delta", 3}, {"one_factorizable", 1}}).in_hypothesis);

  const TheoremClaim l1 = claimed_value(ClaimId::lemma1, {{"order", 4}, {"size", 6}});
  EXPECT_EQ(l1.claimed, 2);
  EXPECT_EQ(l1.relation, Relation::at_least);
}

TEST(Claims, HypothesisViolations) {
  EXPECT_THROW(claimed_value(ClaimId::thm5, {{"n", 6}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm1, {{"n", 3}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm2, {{"m", 2}, {"n", 6}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm2, {{"m", 6}, {"n", 3}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm2, {{"m", 3}, {"n", 5}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm3, {{"delta", 3}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm4, {{"k", 3}, {"n", 3}}), HypothesisViolation);
  EXPECT_THROW(claimed_value(ClaimId::thm1, {}), HypothesisViolation);
}

TEST(Claims, Names) {
  for (ClaimId id : all_claims()) EXPECT_EQ(parse_claim(claim_name(id)), id);
  EXPECT_EQ(parse_claim("cor-total"), ClaimId::cor_total);
  EXPECT_FALSE(parse_claim("thm9"));
  EXPECT_EQ(parse_method("orient"), Method::orient);
  EXPECT_FALSE(parse_method("fast"));
}

TEST(Suites, Thm1) {
  SuiteOptions opt;
  const auto rs = run_suite(ClaimId::thm1, opt);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].computed, 2);
  EXPECT_EQ(rs[1].computed, 3);
  for (const auto& r : rs) {
    EXPECT_EQ(r.match, true);
    EXPECT_TRUE(r.lower_bound_ok);
    EXPECT_EQ(r.poly->value, r.orient->value);
  }
}

TEST(Suites, Thm6CycleMismatchIsReported) {
  const auto rs = run_suite(ClaimId::thm6, {});
  const VerificationReport& r = find(rs, "L(C_4)");
  EXPECT_EQ(r.claim.claimed, 3);
  EXPECT_EQ(r.computed, 2);
  EXPECT_EQ(r.match, false);
  EXPECT_EQ(r.match_alt, true);
  EXPECT_EQ(r.match_proof, false);
  EXPECT_EQ(diag<bool>(r, "factorization_valid"), true);
  EXPECT_EQ(diag<bool>(r, "paper_orientation_pairwise_balanced"), false);
}

TEST(Suites, Thm3CirculantMatchesAltReading) {
  const auto rs = run_suite(ClaimId::thm3, {});
  const VerificationReport& r = find(rs, "circulant_bipartite[4,2]");
  EXPECT_EQ(r.claim.claimed, 1);
  EXPECT_EQ(r.computed, 2);
  EXPECT_EQ(r.match, false);
  EXPECT_EQ(r.match_alt, true);
  EXPECT_EQ(diag<std::int64_t>(r, "eulerian_parity_diff"), 2);
}

TEST(Suites, Thm4OrientationIsPairwiseEulerian) {
  const auto rs = run_suite(ClaimId::thm4, {});
  for (const auto& r : rs) {
    EXPECT_EQ(diag<bool>(r, "paper_orientation_pairwise_balanced"), true) << r.instance;
    EXPECT_EQ(diag<std::int64_t>(r, "paper_orientation_max_outdegree"), r.claim.claimed) << r.instance;
  }
  EXPECT_EQ(find(rs, "K_{2,2,2}").computed, 3);
}

TEST(Suites, CorTotalReportsStrengthening) {
  const auto rs = run_suite(ClaimId::cor_total, {});
  const VerificationReport& k3 = find(rs, "T(K_3)");
  EXPECT_FALSE(k3.claim.in_hypothesis);
  EXPECT_EQ(k3.computed, 3);
  EXPECT_EQ(k3.match, true);
  EXPECT_EQ(diag<bool>(k3, "strengthening"), true);
  const VerificationReport& k4 = find(rs, "T(K_4)");
  EXPECT_TRUE(k4.claim.in_hypothesis);
  EXPECT_EQ(k4.computed, 5);
  EXPECT_EQ(k4.match, true);
}

TEST(Suites, BudgetExceededIsInBand) {
  SuiteOptions opt;
  opt.budget.max_term_mults = 20;
  opt.budget.max_search_nodes = 5;
  opt.budget.max_subsets = 64;
  const auto rs = run_suite(ClaimId::thm1, opt);
  ASSERT_EQ(rs.size(), 2u);
  const VerificationReport& r = rs[1];
  EXPECT_FALSE(r.computed);
  EXPECT_FALSE(r.match);
  EXPECT_TRUE(r.lower_bound_ok);
  const std::string js = reports_to_json("thm1", rs);
  EXPECT_NE(js.find("\"computed\": \"budget-exceeded\""), std::string::npos);
}

TEST(Suites, SingleMethod) {
  SuiteOptions opt;
  opt.method = Method::poly;
  const auto rs = run_suite(ClaimId::cor2, opt);
  ASSERT_EQ(rs.size(), 4u);
  for (const auto& r : rs) {
    EXPECT_TRUE(r.poly);
    EXPECT_FALSE(r.orient);
    EXPECT_EQ(r.match, true);
  }
}

TEST(Suites, MaxSizeSelectsInstances) {
  EXPECT_EQ(suite_instances(ClaimId::cor2, 2).size(), 2u);
  EXPECT_EQ(suite_instances(ClaimId::thm2, 6).size(), 1u);
  EXPECT_EQ(suite_instances(ClaimId::thm5, 4).size(), 1u);
  EXPECT_EQ(suite_instances(ClaimId::thm5, 3).size(), 0u);
  EXPECT_EQ(suite_instances(ClaimId::thm6, 8).size(), 6u);
  for (ClaimId id : all_claims()) EXPECT_FALSE(suite_instances(id, default_max_size(id)).empty());
}

TEST(Suites, LowerBoundAcrossAllSuites) {
  for (ClaimId id : all_claims())
    for (const auto& r : run_suite(id, {})) EXPECT_TRUE(r.lower_bound_ok) << r.suite << " " << r.instance;
}

TEST(Reports, JsonRoundTripIsByteIdentical) {
  SuiteOptions timed;
  timed.timing = true;
  for (ClaimId id : {ClaimId::thm3, ClaimId::thm6, ClaimId::cor_total}) {
    for (const SuiteOptions& opt : {SuiteOptions{}, timed}) {
      const std::string js = reports_to_json(claim_name(id), run_suite(id, opt));
      const ReportDocument doc = reports_from_json(js);
      EXPECT_EQ(doc.suite, claim_name(id));
      EXPECT_EQ(reports_to_json(doc.suite, doc.reports), js);
    }
  }
}

TEST(Reports, ElapsedOnlyWithTiming) {
  EXPECT_EQ(reports_to_json("thm1", run_suite(ClaimId::thm1, {})).find("elapsed_ms"), std::string::npos);
  SuiteOptions timed;
  timed.timing = true;
  EXPECT_NE(reports_to_json("thm1", run_suite(ClaimId::thm1, timed)).find("elapsed_ms"), std::string::npos);
}

TEST(Reports, SchemaErrors) {
  EXPECT_THROW(reports_from_json("{"), std::invalid_argument);
  EXPECT_THROW(reports_from_json("[]"), std::invalid_argument);
  EXPECT_THROW(reports_from_json(R"({"suite":"thm1"})"), std::invalid_argument);
  EXPECT_THROW(reports_from_json(R"({"suite":"thm1","instances":[{"suite":"thm1"}]})"), std::invalid_argument);
  std::string js = reports_to_json("thm1", run_suite(ClaimId::thm1, {}));
  js.replace(js.find("\"computed\": 2"), 13, "\"computed\": \"x\"");
  EXPECT_THROW(reports_from_json(js), std::invalid_argument);
}

TEST(Reports, CsvHasOneRowPerReport) {
  const auto rs = run_suite(ClaimId::cor2, {});
  const std::string csv = reports_to_csv(rs);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "suite,instance,params,order,size,relation,in_hypothesis,claimed,claimed_alt,claimed_proof,computed,"
            "proven_lower_bound,match,match_alt,match_proof,lower_bound_ok,method,methods,elapsed_ms,work,diagnostics");
  EXPECT_NE(csv.find("cor2,\"K_{1,1}\",\"{\"\"n\"\":1}\",2,1,eq,true,2,,,2,,true"), std::string::npos) << csv;
}

TEST(Reports, Table) {
  const std::string t = reports_to_table(run_suite(ClaimId::thm5, {}));
  EXPECT_NE(t.find("L(K_4)"), std::string::npos);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 2);
}
