#include <gtest/gtest.h>

#include <random>

#include "dehn/errors.hpp"
#include "dehn/stokes.hpp"
#include "sol_words.hpp"

using namespace dehn;

namespace {

using K = Letter::Kind;

SolModel real_model() { return SolModel(NormModel::real(), NormModel::real(), 2, 2); }
SolModel padic_model() { return SolModel(NormModel::padic(2), NormModel::padic(3), Rational(1, 2), Rational(1, 3)); }

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

TEST(NormModel, Examples) {
  EXPECT_EQ(NormModel::real().abs(Rational(-3, 2)), Rational(3, 2));
  auto p2 = NormModel::padic(2);
  EXPECT_EQ(p2.abs(8), Rational(1, 8));
  EXPECT_EQ(p2.abs(Rational(3, 4)), 4);
  EXPECT_EQ(p2.abs(0), 0);
  EXPECT_EQ(padic_valuation(Rational(12, 5), 2), 2);
  EXPECT_EQ(padic_valuation(Rational(5, 12), 2), -2);
}

TEST(NormModel, Multiplicative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
  for (auto model : {NormModel::real(), NormModel::padic(2), NormModel::padic(5)}) {
    EXPECT_EQ(model.abs(1), 1);
    for (int i = 0; i < 100; ++i) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      EXPECT_EQ(model.abs(a * b), model.abs(a) * model.abs(b));
    }
  }
}

TEST(SolModel, Normalization) {
  EXPECT_THROW(SolModel(NormModel::real(), NormModel::real(), 3, 2), InvalidInput);
  EXPECT_THROW(SolModel(NormModel::real(), NormModel::real(), 1, 2), InvalidInput);
  auto m = SolModel(NormModel::real(), NormModel::real(), 2, 4);
  ASSERT_TRUE(m.mu().exact);
  EXPECT_EQ(*m.mu().exact, Rational(1, 2));
  auto inc = SolModel(NormModel::real(), NormModel::real(), 2, 3);
  EXPECT_FALSE(inc.mu().exact);
  EXPECT_LT(inc.mu().lower, inc.mu().upper);
  EXPECT_LE(inc.mu().upper, 1);
  EXPECT_GE(inc.pow_mu_upper(9), 4);
}

TEST(SolGroup, ProductLaw) {
  auto m = real_model();
  SolElement a{1, 2, 3}, b{Rational(1, 2), -1, -1};
  EXPECT_EQ(multiply(m, a, b), (SolElement{1 + 4, 2 - Rational(1, 8), 2}));
  EXPECT_EQ(multiply(m, a, inverse(m, a)), SolElement{});
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Word u = testkit::random_word(rng, 6), v = testkit::random_word(rng, 6), w = testkit::random_word(rng, 6);
    auto x = testkit::word_value(m, u), y = testkit::word_value(m, v), z = testkit::word_value(m, w);
    EXPECT_EQ(multiply(m, multiply(m, x, y), z), multiply(m, x, multiply(m, y, z)));
  }
}

TEST(GammaPath, Lengths) {
  auto m = real_model();
  EXPECT_EQ(gamma_path(m, 1, 1).length(), 8u);
  EXPECT_EQ(gamma_path(m, 2, 1).length(), 18u);
  for (int n = 1; n <= 5; ++n) {
    std::size_t lambda = 4 * n + 4;
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(gamma_path(m, k, n).length(), lambda);
      lambda = 2 * lambda + 2;
    }
  }
  auto c = gamma_path(m, 1, 3).vertices();
  EXPECT_EQ(c[4], (SolElement{8, 0, 3}));
}

TEST(GammaPath, GStepSequence) {
  EXPECT_EQ(g_step(real_model(), 3), 1);
  EXPECT_EQ(g_step(padic_model(), 3), Rational(1, 27));
}

TEST(Integrands, Examples) {
  auto m = real_model();
  auto in = standard_integrands(m, IntegrandVariant::real);
  EXPECT_EQ(in.alpha({Rational(-3, 2), 0, 0}).first, Rational(3, 2));
  EXPECT_EQ(in.beta({0, 2, 0}).first, 0);
  EXPECT_EQ(in.beta({0, 0, 0}).first, 1);
  EXPECT_THROW(standard_integrands(m, IntegrandVariant::ultrametric), VariantUnavailable);

  auto pm = SolModel(NormModel::padic(3), NormModel::padic(3), Rational(1, 3), Rational(1, 3));
  auto u = standard_integrands(pm, IntegrandVariant::ultrametric);
  EXPECT_EQ(u.beta({0, 3, 0}), (KValue{1, -2}));
  EXPECT_EQ(u.beta({0, Rational(1, 3), 0}), (KValue{0, 0}));
  EXPECT_EQ(u.beta({0, 0, 0}), (KValue{1, 1}));
  EXPECT_EQ(u.alpha({5, 7, 0}), (KValue{5, 0}));
}

TEST(Stokes, LengthTwoVanishes) {
  auto m = real_model();
  auto in = standard_integrands(m, IntegrandVariant::real);
  auto p = ClosedPath::from_word(m, {{K::x, 1, 0}, {K::x, -1, 0}});
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(stokes_integral(p, in.beta, in.alpha), KValue{});
}

TEST(Stokes, RejectsOpenWord) {
  EXPECT_THROW(ClosedPath::from_word(real_model(), {{K::x, 1, 0}}), InvalidInput);
}

TEST(GammaIntegral, Examples) {
  auto m = real_model();
  for (int k : {1, 3}) {
    auto c = gamma_integral_check(m, k, 5, IntegrandVariant::real);
    EXPECT_EQ(c.computed_norm, 64);
    EXPECT_EQ(c.predicted, 64);
    EXPECT_TRUE(c.equal);
  }
}

TEST(GammaIntegral, AllVariantsUpToK4N12) {
  auto r = real_model();
  auto p = padic_model();
  auto q = SolModel(NormModel::padic(3), NormModel::padic(5), Rational(1, 3), Rational(1, 5));
  auto mixed = SolModel(NormModel::real(), NormModel::padic(2), 2, Rational(1, 4));
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 12; ++n) {
      auto cr = gamma_integral_check(r, k, n, IntegrandVariant::real);
      EXPECT_TRUE(cr.equal);
      EXPECT_EQ(cr.computed_norm, pow(Rational(2), n + 1));
      auto cp = gamma_integral_check(p, k, n, IntegrandVariant::ultrametric);
      EXPECT_TRUE(cp.equal);
      EXPECT_EQ(cp.computed_norm, pow(Rational(2), n - 1));
      auto cq = gamma_integral_check(q, k, n, IntegrandVariant::ultrametric);
      EXPECT_TRUE(cq.equal);
      EXPECT_EQ(cq.computed_norm, pow(Rational(3), n));
      EXPECT_TRUE(gamma_integral_check(p, k, n, IntegrandVariant::real).equal);
      EXPECT_TRUE(gamma_integral_check(mixed, k, n, IntegrandVariant::real).equal);
      EXPECT_TRUE(gamma_integral_check(mixed, k, n, IntegrandVariant::ultrametric).equal);
    }
}

TEST(GammaPath, NeighboursShareFirstCoordinate) {
  for (const auto& m : {real_model(), padic_model()})
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= 4; ++k) {
        auto path = gamma_path(m, k, n);
        const auto& c = path.vertices();
        std::size_t len = c.size();
        auto check = [&](std::size_t i) {
          EXPECT_EQ(c[(i + len - 1) % len].x, c[(i + 1) % len].x) << "k=" << k << " n=" << n << " i=" << i;
        };
        for (int i = 1; i <= n - 1; ++i) check(i);
        for (int i = n + 2; i <= 2 * n + 2; ++i) check(i);
        std::size_t lambda = 4 * n + 4;
        for (int j = 1; j <= k; ++j) {
          check(lambda);
          lambda = 2 * lambda + 2;
        }
      }
}

TEST(PathCalculus, SixIdentitiesOnRandomWords) {
  auto m = real_model();
  auto in = standard_integrands(m, IntegrandVariant::real);
  auto r = testkit::check_path_calculus(m, in, 200, 2024);
  EXPECT_EQ(r.antisymmetry, 200);
  EXPECT_EQ(r.concatenation, 200);
  EXPECT_EQ(r.filiform, 200);
  EXPECT_EQ(r.product, 200);
  EXPECT_EQ(r.conjugation, 200);
  EXPECT_EQ(r.stokes, 200);
}

TEST(PathCalculus, UltrametricIntegrands) {
  auto m = SolModel(NormModel::padic(2), NormModel::padic(2), Rational(1, 2), Rational(1, 2));
  auto in = standard_integrands(m, IntegrandVariant::ultrametric);
  auto r = testkit::check_path_calculus(m, in, 100, 77, -1);
  EXPECT_EQ(r.antisymmetry + r.concatenation + r.filiform + r.product + r.conjugation + r.stokes, 600);
}

TEST(TriangleBound, SingleGenerators) {
  auto m = real_model();
  EXPECT_LE(triangle_bound(m, 1), 2);
  EXPECT_EQ(word_ball(m, 1).size(), 7u);
}

TEST(TriangleBound, DominatesRadiusThreeTriangles) {
  auto m = real_model();
  auto in = standard_integrands(m, IntegrandVariant::real);
  Rational c = triangle_bound(m, 3);
  auto ball = word_ball(m, 3);
  std::vector<SolElement> bases{{}, {5, -3, 4}, {Rational(1, 3), 7, -6}, {-11, Rational(1, 2), 9}};
  for (const auto& b : word_ball(m, 1)) bases.push_back(b);
  Rational worst = 0;
  for (const auto& g0 : bases)
    for (const auto& h : ball)
      for (const auto& h2 : ball) {
        std::vector<SolElement> tri{g0, multiply(m, g0, h), multiply(m, g0, h2)};
        Rational v = abs_rational(stokes_integral(tri, in.beta, in.alpha).first);
        if (v > worst) worst = v;
      }
  EXPECT_LE(worst, c);
  EXPECT_GT(worst, 0);
  std::vector<SolElement> flat{{}, {1, 0, 0}, {1, 0, 0}};
  EXPECT_EQ(stokes_integral(flat, in.beta, in.alpha), KValue{});
}

TEST(LowerBoundTable, RealAndUltrametric) {
  auto t = lower_bound_table(real_model(), 1, 8);
  EXPECT_EQ(t.variant, IntegrandVariant::real);
  ASSERT_EQ(t.rows.size(), 8u);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].value, pow(Rational(2), t.rows[i].n + 1));
    ASSERT_TRUE(t.rows[i].area_lower_bound);
    EXPECT_EQ(*t.rows[i].area_lower_bound, t.rows[i].value / t.triangle_bound);
    if (i > 0) EXPECT_EQ(t.rows[i].value / t.rows[i - 1].value, 2);
  }
  EXPECT_FALSE(t.asymptotically_infinite_area);

  auto u = lower_bound_table(padic_model(), 2, 6);
  EXPECT_EQ(u.variant, IntegrandVariant::ultrametric);
  EXPECT_TRUE(u.asymptotically_infinite_area);
  EXPECT_LT(u.rows.front().value, u.rows.back().value);
}
