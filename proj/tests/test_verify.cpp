#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "contactsurg/diagram_io.hpp"
#include "contactsurg/surgery.hpp"
#include "tamper.hpp"

using namespace contactsurg;

namespace {

ContactDiagram unknots(const std::vector<std::string>& coefficients) {
  ContactDiagram d;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    d.components.push_back(
        {"K" + std::to_string(i), LegendrianKnotData{-1, 0, "unknot"}, Rational::parse(coefficients[i]), {}});
  }
  return d;
}

bool has_failed(const VerifyReport& r, const std::string& clause) {
  return std::any_of(r.clauses.begin(), r.clauses.end(),
                     [&](const ClauseResult& c) { return c.clause == clause && !c.passed; });
}

}  // namespace

TEST(Verify, ConvertOutputPasses) {
  const PmOneDiagram out = convert(unknots({"-5/3", "3", "1/2", "0", "1", "-1", "inf", "7/3"}));
  const VerifyReport report = verify(out);
  EXPECT_TRUE(report.passed());
  for (const auto& chain : out.chains) {
    if (!chain.certificate) continue;
    for (const auto& clause : chain.certificate->identity_check) EXPECT_TRUE(clause.passed) << clause.name;
  }
}

TEST(Verify, PositiveCoefficientCarriesTwistIdentity) {
  const PmOneDiagram out = convert(unknots({"7/3"}));
  const auto& cert = *out.chains[0].certificate;
  ASSERT_EQ(cert.k, 1);
  // (1 0; k 1) (p p'; q-kp q'-kp') = (p p'; q q')
  const IntMat2 expected = twist_matrix(cert.k) * (cert.product(0, 0) < 0 ? IntMat2(-cert.product) : cert.product);
  EXPECT_EQ(*cert.composite, expected);
  EXPECT_EQ((*cert.composite)(0, 0), 7);
  EXPECT_EQ((*cert.composite)(1, 0), 3);
  const auto names = derive_clauses(out.chains[0]);
  EXPECT_TRUE(std::any_of(names.begin(), names.end(), [](const Clause& c) { return c.name == "twist_identity"; }));
}

TEST(Verify, ReplacementLemmaLabelOnlyForLargeTwists) {
  auto has_lemma = [](const std::string& r) {
    const auto out = convert(unknots({r}));
    const auto& clauses = out.chains[0].certificate->identity_check;
    return std::any_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.name == "assumed replacement lemma" && c.passed; });
  };
  EXPECT_FALSE(has_lemma("3"));
  EXPECT_TRUE(has_lemma("1/2"));
  EXPECT_TRUE(has_lemma("2/9"));
}

TEST(Verify, AlteredCoefficientBreaksRatio) {
  PmOneDiagram out = convert(unknots({"-5/3"}));
  out.chains[0].certificate->target = Rational::parse("-5/4");
  const VerifyReport report = verify(out);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(has_failed(report, "chain_column_ratio"));
}

TEST(Verify, AlteredProductBreaksDeterminant) {
  PmOneDiagram out = convert(unknots({"-7/5"}));
  out.chains[0].certificate->product(0, 1) += 1;
  const VerifyReport report = verify(out);
  EXPECT_TRUE(has_failed(report, "chain_det_one"));
  EXPECT_TRUE(has_failed(report, "chain_matrix_recomputed"));
}

TEST(Verify, TamperedInstructionsAreCaught) {
  PmOneDiagram out = convert(unknots({"-7/5"}));
  out.chains[0].instructions[1].tb_local = -3;
  EXPECT_TRUE(has_failed(verify(out), "chain_instructions"));

  out = convert(unknots({"-7/5"}));
  out.chains[0].instructions[0].coefficient = 2;
  EXPECT_TRUE(has_failed(verify(out), "target_form"));

  out = convert(unknots({"-7/5"}));
  out.chains[0].instructions[0].rot = 0;
  EXPECT_TRUE(has_failed(verify(out), "chain_instructions"));

  out = convert(unknots({"0"}));
  out.chains[0].instructions.push_back(out.chains[0].instructions[0]);
  EXPECT_TRUE(has_failed(verify(out), "zero_surgery"));

  out = convert(unknots({"-7/5"}));
  out.chains[0].certificate.reset();
  EXPECT_TRUE(has_failed(verify(out), "certificate_present"));

  out = convert(unknots({"-1"}));
  out.chains[0].coefficient = Rational::infinity();
  EXPECT_TRUE(has_failed(verify(out), "dispatch"));
}

TEST(Verify, HugeTamperedTwistDoesNotHang) {
  PmOneDiagram out = convert(unknots({"1/2"}));
  out.chains[0].certificate->k = Integer("1000000000000000000000");
  EXPECT_FALSE(verify(out).passed());
}

TEST(Verify, RandomFieldMutationsAlwaysFail) {
  const PmOneDiagram base = convert(unknots({"-5/3", "3", "1/2", "-7/5", "4/9"}));
  const std::string text = dump_result(base);
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    auto doc = tamper::Json::parse(text);
    const std::string label = tamper::mutate_document(doc, rng);
    const PmOneDiagram mutated = parse_result(doc.dump());
    ASSERT_FALSE(verify(mutated).passed()) << label;
  }
}

TEST(Verify, EveryFieldIsCovered) {
  const PmOneDiagram base = convert(unknots({"-5/3", "2/5"}));
  const std::string text = dump_result(base);
  std::mt19937_64 rng(7);
  for (const auto& field : tamper::fields()) {
    for (std::size_t chain = 0; chain < 2; ++chain) {
      for (int trial = 0; trial < 20; ++trial) {
        auto doc = tamper::Json::parse(text);
        const std::string label = tamper::mutate(doc["chains"][chain]["certificate"], field, rng);
        ASSERT_FALSE(verify(parse_result(doc.dump())).passed()) << "chain " << chain << ": " << label;
      }
    }
  }
}
