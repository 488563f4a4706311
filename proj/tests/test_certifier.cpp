#include <gtest/gtest.h>

#include "nonisog/certificate_json.hpp"
#include "nonisog/certifier.hpp"
#include "nonisog/corpus.hpp"
#include "nonisog/errors.hpp"
#include "nonisog/number_theory.hpp"
#include "nonisog/parser.hpp"
#include "oracles.hpp"

using namespace nonisog;

namespace {

Certificate run(const std::string& f, const std::string& h) { return certify(parse_polynomial(f), parse_polynomial(h)); }

bool all_verified(const Certificate& c) {
  return std::all_of(c.trace.begin(), c.trace.end(),
                     [](const Hypothesis& h) { return h.status == HypothesisStatus::Verified; });
}

const std::string kShanksM1 = "x^3 + x^2 - 2*x - 1";
const std::string kShanks1 = "x^3 - x^2 - 4*x - 1";

}  // namespace

TEST(Certifier, Setting) {
  EXPECT_EQ(check_setting(3).status, HypothesisStatus::Verified);
  EXPECT_EQ(check_setting(5).status, HypothesisStatus::Verified);
  EXPECT_EQ(check_setting(7).status, HypothesisStatus::Failed);
  EXPECT_EQ(check_setting(9).status, HypothesisStatus::Failed);
  EXPECT_EQ(check_setting(11).status, HypothesisStatus::Verified);
  EXPECT_FALSE(check_setting(3).citation.empty());
}

TEST(Certifier, SupersingularParity) {
  for (std::uint64_t p : primes_in_range(2, 100)) {
    if (p == 3) continue;
    const auto s = supersingular_constraint(Integer(3), Integer(static_cast<unsigned long>(p)));
    EXPECT_EQ(s.allowed, p % 3 != 1) << p;
  }
  const auto s311 = supersingular_constraint(Integer(5), Integer(11));
  EXPECT_EQ(s311.f_p, Integer(1));
  EXPECT_FALSE(s311.allowed);
  const auto s57 = supersingular_constraint(Integer(5), Integer(7));
  EXPECT_EQ(s57.f_p, Integer(4));
  EXPECT_TRUE(s57.allowed);
  const auto s37 = supersingular_constraint(Integer(3), Integer(7));
  EXPECT_EQ(s37.f_p, Integer(1));
  EXPECT_FALSE(s37.allowed);
  EXPECT_EQ(supersingular_constraint(Integer(3), Integer(5)).f_p, Integer(2));
  const auto same = supersingular_constraint(Integer(5), Integer(5));
  EXPECT_FALSE(same.f_p.has_value());
  EXPECT_TRUE(same.allowed);
  EXPECT_THROW(supersingular_constraint(Integer(4), Integer(7)), InvalidInput);
  EXPECT_THROW(supersingular_constraint(Integer(5), Integer(9)), InvalidInput);
}

TEST(Certifier, Disjointness) {
  using Kind = DisjointnessResult::Kind;
  const auto r1 = prove_linear_disjointness(parse_polynomial("x^3 - 5"), parse_polynomial(kShanksM1));
  EXPECT_EQ(r1.kind, Kind::Disjoint);
  EXPECT_EQ(r1.rule, "R1");
  const auto r2 = prove_linear_disjointness(parse_polynomial(kShanksM1), parse_polynomial("x^3 - 5"));
  EXPECT_EQ(r2.rule, "R2");
  const auto r3 = prove_linear_disjointness(parse_polynomial("x^5 - x - 1"), parse_polynomial("x^5 + 15*x + 12"));
  EXPECT_EQ(r3.kind, Kind::Disjoint);
  EXPECT_EQ(r3.rule, "R3");
  EXPECT_NE(r3.detail.find("2869"), std::string::npos);
  const auto r0 = prove_linear_disjointness(parse_polynomial("x^3 - 5"), parse_polynomial("2*x^3 - 10"));
  EXPECT_EQ(r0.kind, Kind::NotDisjoint);
  EXPECT_EQ(r0.rule, "R0");
  // Gal(x^5 - 2) = F20 with discriminant class 5, so R3 applies here as well.
  const auto r3b = prove_linear_disjointness(parse_polynomial("x^5 - x - 1"), parse_polynomial("x^5 - 2"));
  EXPECT_EQ(r3b.rule, "R3");
  EXPECT_EQ(prove_linear_disjointness(parse_polynomial("x^5 - x - 1"), parse_polynomial("x^5 + x + 3")).kind,
            Kind::Unknown);
  EXPECT_EQ(prove_linear_disjointness(parse_polynomial(kShanksM1), parse_polynomial(kShanks1)).kind, Kind::Unknown);
  EXPECT_THROW(prove_linear_disjointness(parse_polynomial("x^7 - 2"), parse_polynomial("x^7 - 3")), CapabilityError);
  EXPECT_THROW(prove_linear_disjointness(parse_polynomial("x^3 - 1"), parse_polynomial("x^3 - 5")), InvalidInput);
}

TEST(Certifier, HomZeroPairs) {
  const std::vector<std::pair<std::string, std::string>> pairs = {{"x^5 - x - 1", oracle::kCyclicQuintic},
                                                                  {"x^5 + 15*x + 12", oracle::kCyclicQuintic},
                                                                  {"x^5 - x - 1", "x^5 + 15*x + 12"},
                                                                  {"x^5 + 15*x + 12", "x^5 - x - 1"},
                                                                  {"x^3 - x - 1", kShanksM1}};
  for (const auto& [f, h] : pairs) {
    const Certificate c = run(f, h);
    EXPECT_EQ(c.verdict.tag, VerdictTag::HomZero) << f << " / " << h << ": " << c.verdict.reason;
    EXPECT_TRUE(all_verified(c));
    EXPECT_FALSE(c.char_p_constraints.empty());
    for (const auto& row : c.char_p_constraints) EXPECT_LT(row.p, 50);
  }
}

TEST(Certifier, CyclicCubics) {
  const Certificate c = run(kShanksM1, kShanks1);
  EXPECT_EQ(c.verdict.tag, VerdictTag::NotIsogenousOverClosure);
  EXPECT_TRUE(all_verified(c));
  EXPECT_EQ(c.trace.back().name, "stem_fields_non_isomorphic");
  // Same field, different generator: isomorphic, so no claim.
  const Polynomial f = oracle::shanks(-1);
  const Certificate same = certify(f, f.shifted(1));
  EXPECT_EQ(same.verdict.tag, VerdictTag::Inconclusive);
}

TEST(Certifier, OneReducible) {
  const Certificate ex = run("x^3 - 5", "x^3 - 15*x + 22");
  EXPECT_EQ(ex.verdict.tag, VerdictTag::Inconclusive);
  EXPECT_NE(ex.verdict.reason.find("both j-invariants in S"), std::string::npos);
  EXPECT_TRUE(all_verified(ex));

  const Certificate q = run("x^5 - 2", "x^5 - 1");
  EXPECT_EQ(q.verdict.tag, VerdictTag::IsogenyImpliesCM);
  EXPECT_EQ(q.verdict.cyclotomic_degree, 5);
  EXPECT_TRUE(all_verified(q));

  EXPECT_EQ(run("x^5 - x - 1", "x^5 - 1").verdict.tag, VerdictTag::IsogenyImpliesCM);
  EXPECT_EQ(run("x^5 - 1", "x^5 - x - 1").verdict.tag, VerdictTag::IsogenyImpliesCM);

  const Certificate c = run("x^3 - x - 1", "x^3 - 1");
  EXPECT_EQ(c.verdict.tag, VerdictTag::NotIsogenousOverClosure);
  EXPECT_NE(c.trace.back().detail.find("-6912/23"), std::string::npos);
}

TEST(Certifier, Soundness) {
  // Pairs known to be isogenous must never receive a non-isogeny claim.
  for (const auto& [f, h] : std::vector<std::pair<std::string, std::string>>{
           {"x^3 - 5", "x^3 - 15*x + 22"}, {"x^5 - 2", "x^5 - 1"}, {"x^5 - x - 1", "x^5 - x - 1"},
           {"x^3 - 5", "8*x^3 - 5"}}) {
    const VerdictTag t = run(f, h).verdict.tag;
    EXPECT_NE(t, VerdictTag::HomZero) << f << " / " << h;
    EXPECT_NE(t, VerdictTag::NotIsogenousOverClosure) << f << " / " << h;
  }
}

TEST(Certifier, BadInputNeverThrows) {
  const std::vector<std::pair<Polynomial, Polynomial>> pairs = {
      {Polynomial(), Polynomial()},
      {Polynomial::constant(3), Polynomial::constant(4)},
      {parse_polynomial("x^3 - 5"), parse_polynomial("x^5 - 2")},
      {parse_polynomial("x^3 - 3*x + 2"), parse_polynomial("x^3 - 5")},
      {parse_polynomial("x^9 - 2"), parse_polynomial("x^9 - 3")},
      {parse_polynomial("x^11 - x - 1"), parse_polynomial("x^11 - 2")},
      {parse_polynomial("x^40 - 2"), parse_polynomial("x^40 - 3")},
      {parse_polynomial("x - 1"), parse_polynomial("x + 1")}};
  for (const auto& [f, h] : pairs) {
    Certificate c;
    EXPECT_NO_THROW(c = certify(f, h)) << f.to_string();
    EXPECT_EQ(c.verdict.tag, VerdictTag::Inconclusive) << f.to_string();
    EXPECT_FALSE(c.trace.empty());
  }
}

TEST(Certifier, FaultInjectionMonotonicity) {
  const oracle::SuiteResult r = oracle::fault_injection_suite(NONISOG_CORPUS_PATH);
  EXPECT_GT(r.cases, 50);
  EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Certifier, ChainSoundnessCheck) {
  Certificate c = run("x^5 - x - 1", oracle::kCyclicQuintic);
  EXPECT_TRUE(chain_is_sound(c));
  c.trace[3].status = HypothesisStatus::Unknown;
  EXPECT_FALSE(chain_is_sound(c));
  c.trace.clear();
  EXPECT_FALSE(chain_is_sound(c));
}

TEST(CertificateJson, SchemaAndKeyOrder) {
  const auto doc = to_json(run("x^3 - 5", "x^3 - 15*x + 22"));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"inputs", "verdict", "char_p_constraints", "trace", "version"}));
  EXPECT_EQ(doc["inputs"]["h"], nlohmann::ordered_json({"22", "-15", "0", "1"}));
  EXPECT_EQ(doc["inputs"]["n"], "3");
  EXPECT_EQ(doc["verdict"]["tag"], "Inconclusive");
  const std::string dumped = doc.dump();
  EXPECT_NE(dumped.find("j(f) = 0, j(h) = 54000"), std::string::npos);
  for (const auto& row : doc["trace"]) {
    std::vector<std::string> k;
    for (auto it = row.begin(); it != row.end(); ++it) k.push_back(it.key());
    EXPECT_EQ(k, (std::vector<std::string>{"name", "citation", "status", "detail"}));
  }

  const auto hom = to_json(run("x^5 - x - 1", "x^5 + 15*x + 12"));
  const auto& row = hom["char_p_constraints"][0];
  EXPECT_EQ(row["p"], "3");
  EXPECT_EQ(row["f_p"], "4");
  EXPECT_EQ(row["allowed"], true);
  const auto& five = hom["char_p_constraints"][1];
  EXPECT_EQ(five["p"], "5");
  EXPECT_TRUE(five["f_p"].is_null());

  const auto rational = to_json(certify(parse_polynomial("1/2*x^3 - 5"), parse_polynomial("x^3 - 1")));
  EXPECT_EQ(rational["inputs"]["f"][3], "1/2");
}

TEST(Corpus, ParsesAndRejects) {
  EXPECT_TRUE(parse_corpus(R"({"cases": []})").empty());
  EXPECT_THROW(parse_corpus("not json"), CorpusError);
  EXPECT_THROW(parse_corpus(R"({"cases": [{"name": "a"}]})"), CorpusError);
  EXPECT_THROW(parse_corpus(R"({"cases": [{"name": "a", "f": "x^3", "expected": "Maybe", "citation": ""}]})"),
               CorpusError);
  EXPECT_THROW(parse_corpus(R"({"cases": [{"name": "a", "f": "x^", "expected": "HomZero", "citation": ""}]})"),
               CorpusError);
  const auto cases = load_corpus(NONISOG_CORPUS_PATH);
  EXPECT_GE(cases.size(), 10u);
  for (const auto& o : run_corpus(cases)) EXPECT_TRUE(o.passed) << o.source->name << ": " << o.message;
}

TEST(Corpus, DetectsTamperedExpectation) {
  auto cases = load_corpus(NONISOG_CORPUS_PATH);
  cases[1].expected = VerdictTag::Inconclusive;
  const auto out = run_corpus(cases);
  EXPECT_FALSE(out[1].passed);
  EXPECT_EQ(out[1].source->name, cases[1].name);
}
