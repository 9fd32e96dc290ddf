#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dehn/classifier.hpp"
#include "dehn/corpus.hpp"
#include "dehn/errors.hpp"
#include "test_support.hpp"

using namespace dehn;

namespace {

std::string param_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

}  // namespace

TEST(ObstructionFlags, Examples) {
  auto rp = obstruction_flags(corpus_algebra("sol-real-padic"));
  EXPECT_TRUE(rp.sol);
  EXPECT_FALSE(rp.sol_non_archimedean);
  auto pp = obstruction_flags(corpus_algebra("sol-padic"));
  EXPECT_TRUE(pp.sol_non_archimedean);
  auto a2 = obstruction_flags(corpus_algebra("abels-2"));
  EXPECT_FALSE(a2.sol || a2.sol_non_archimedean || a2.homological || a2.homological_non_archimedean);
  EXPECT_FALSE(a2.kill_zero_vanishes);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(corpus_algebra("higher-sol")).verdict, Verdict::Quadratic);
  EXPECT_EQ(classify(corpus_algebra("abels-a4")).verdict, Verdict::Quadratic);
  EXPECT_EQ(classify(corpus_algebra("abels-2")).verdict, Verdict::PolyAtMostCubic);
  EXPECT_EQ(classify(corpus_algebra("sl3-v11")).verdict, Verdict::PolyAtMostCubic);
  EXPECT_EQ(classify(corpus_algebra("heisenberg")).verdict, Verdict::Linear);
  EXPECT_EQ(classify(corpus_algebra("sol-padic")).verdict, Verdict::NotCompactlyPresented);
  EXPECT_EQ(classify(corpus_algebra("sol-real-padic")).verdict, Verdict::ExponentialDehn);

  auto sol11 = classify(corpus_algebra("sol-1-1"));
  EXPECT_EQ(sol11.verdict, Verdict::ExponentialDehn);
  EXPECT_TRUE(sol11.flags.sol);
  EXPECT_TRUE(sol11.flags.homological);
  EXPECT_GE(sol11.justification.size(), 2u);
}

TEST(Classify, SolFamilyHomologicalOnlyAtOne) {
  for (auto lambda : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5)}) {
    auto c = classify(sol_lambda(lambda));
    EXPECT_TRUE(c.flags.sol);
    EXPECT_EQ(c.flags.homological, lambda == 1);
    EXPECT_EQ(c.verdict, Verdict::ExponentialDehn);
  }
}

TEST(Classify, RejectsBadInput) {
  auto g = corpus_algebra("heisenberg");
  g.set_a_rank(0);
  EXPECT_THROW(classify(g), InvalidInput);
  GradedLieAlgebra bad("bad", 1, 1, {{"R", FieldKind::archimedean, std::nullopt}},
                       {{"X", "R", {1}}, {"Y", "R", {1}}, {"Z", "R", {3}}});
  bad.set_bracket("X", "Y", {{"Z", 1}});
  EXPECT_THROW(classify(bad), InvalidInput);
}

TEST(Classify, CaveatsAndWarnings) {
  auto g = corpus_algebra("higher-sol");
  g.set_a_nonabelian(true);
  auto c = classify(g);
  EXPECT_GE(c.caveats.size(), 2u);
  auto w = classify(corpus_algebra("example-13dim"));
  EXPECT_FALSE(w.warnings.empty());
  EXPECT_EQ(to_string(Verdict::PolyAtMostCubic), "PolyAtMostCubic");
}

TEST(Classify, KillingCriterionCaveatOnlyWhenDeciding) {
  auto mentions = [](const Classification& c) {
    return std::any_of(c.caveats.begin(), c.caveats.end(),
                       [](const std::string& s) { return s.find("transcendence") != std::string::npos; });
  };
  auto a4 = classify(corpus_algebra("abels-a4"));
  ASSERT_EQ(a4.verdict, Verdict::Quadratic);
  EXPECT_TRUE(mentions(a4));
  auto hs = classify(corpus_algebra("higher-sol"));
  ASSERT_EQ(hs.verdict, Verdict::Quadratic);
  EXPECT_FALSE(mentions(hs));
  EXPECT_FALSE(mentions(classify(corpus_algebra("abels-2"))));
}

class CorpusClassifier : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusClassifier, FlagLatticeConsistency) {
  auto c = classify(corpus_algebra(GetParam()));
  const auto& f = c.flags;
  if (f.sol_non_archimedean) EXPECT_TRUE(f.sol);
  if (f.homological_non_archimedean) EXPECT_TRUE(f.homological);
  bool non_arch = f.sol_non_archimedean || f.homological_non_archimedean;
  EXPECT_EQ(c.verdict == Verdict::NotCompactlyPresented, non_arch);
  EXPECT_EQ(c.verdict == Verdict::ExponentialDehn, (f.sol || f.homological) && !non_arch);
  EXPECT_FALSE(c.justification.empty());
}

TEST_P(CorpusClassifier, InvariantUnderGradedBasisChange) {
  auto g = corpus_algebra(GetParam());
  auto base = classify(g);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = change_basis(g, testkit::random_graded_basis_change(rng, g));
    ASSERT_TRUE(validate(h).ok);
    EXPECT_EQ(classify(h).verdict, base.verdict);
  }
}

TEST_P(CorpusClassifier, InvariantUnderPositiveScaling) {
  auto g = corpus_algebra(GetParam());
  auto base = classify(g);
  std::mt19937 rng(32);
  for (int trial = 0; trial < 50; ++trial)
    EXPECT_EQ(classify(scale_weights(g, testkit::random_positive_rational(rng))).verdict, base.verdict);
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusClassifier, ::testing::ValuesIn(corpus_names()), param_name);
