#include <random>

#include <gtest/gtest.h>

#include "balid/egf.hpp"
#include "balid/gf.hpp"
#include "oracles.hpp"

using balid::EgfSeries;
using balid::Poly;
using balid::PolyQuad;
using balid::QuadRat;
using balid::Rational;
using balid::SequenceCache;

namespace {

EgfSeries<Rational> random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 4);
  EgfSeries<Rational> f(Rational(0), order);
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, Rational(balid::Integer(num(rng)), balid::Integer(den(rng))));
  if (unit_constant && f.coeff(0).is_zero()) f.set_coeff(0, Rational(1));
  return f;
}

}  // namespace

TEST(Egf, ExponentAdditivity) {
  Rational c1(2, 3), c2(-1, 4);
  auto lhs = egf_exp_linear(c1, 8) * egf_exp_linear(c2, 8);
  EXPECT_EQ(lhs, egf_exp_linear(c1 + c2, 8));

  QuadRat q1(Rational(1), Rational(2), Rational(5));
  QuadRat q2(Rational(-1, 2), Rational(1, 3), Rational(5));
  EXPECT_EQ(egf_exp_linear(q1, 8) * egf_exp_linear(q2, 8), egf_exp_linear(q1 + q2, 8));
}

TEST(Egf, MultiplicativeIdentity) {
  std::mt19937 rng(11);
  auto f = random_series(rng, 10, false);
  EXPECT_EQ(f * egf_one(Rational(0), 10), f);
}

TEST(Egf, HyperbolicDecomposition) {
  Rational c(3, 7);
  auto cosh = egf_cosh_linear(c, 12);
  auto sinh = egf_sinh_linear(c, 12);
  EXPECT_EQ(cosh + sinh, egf_exp_linear(c, 12));
  // cosh^2 - sinh^2 = 1, via the convolution product.
  EXPECT_EQ(cosh * cosh - sinh * sinh, egf_one(Rational(0), 12));
}

TEST(Egf, ExpZeroIsOne) {
  EXPECT_EQ(egf_exp_linear(Rational(0), 6), egf_one(Rational(0), 6));
}

TEST(Egf, RecipOfOne) {
  auto one = egf_one(Rational(0), 8);
  EXPECT_EQ(one.recip(), one);
}

TEST(Egf, SechCoefficientsAreEulerNumbers) {
  auto cosh = egf_cosh_linear(Rational(1), 14);
  auto sech = cosh.recip();
  EXPECT_EQ(cosh * sech, egf_one(Rational(0), 14));
  auto zig = oracles::euler_zigzag(15);
  for (int n = 0; n <= 14; ++n) {
    if (n % 2 != 0) {
      EXPECT_TRUE(sech.coeff(n).is_zero()) << "n=" << n;
      continue;
    }
    balid::Integer expected = zig[static_cast<std::size_t>(n)];
    if ((n / 2) % 2 != 0) expected = -expected;
    EXPECT_EQ(sech.coeff(n), Rational(expected)) << "n=" << n;
  }
}

TEST(Egf, BernoulliFromSeriesReciprocal) {
  SequenceCache cache;
  auto recip = egf_expm1_over_z(Rational(0), 16).recip();
  for (int n = 0; n <= 16; ++n) EXPECT_EQ(recip.coeff(n), cache.bernoulli_number(n)) << n;
}

TEST(Egf, RecipIsAnInvolution) {
  std::mt19937 rng(12);
  for (int i = 0; i < 30; ++i) {
    auto f = random_series(rng, 10, true);
    EXPECT_EQ(f.recip().recip(), f);
    EXPECT_EQ(f * f.recip(), egf_one(Rational(0), 10));
  }
}

TEST(Egf, RecipNeedsUnitConstant) {
  EgfSeries<Rational> f(Rational(0), 4);
  f.set_coeff(1, Rational(1));
  EXPECT_THROW(f.recip(), balid::not_invertible);
}

TEST(Egf, OrderMismatchRejected) {
  auto f = egf_one(Rational(0), 4);
  auto g = egf_one(Rational(0), 5);
  EXPECT_THROW(f + g, balid::order_mismatch);
  EXPECT_THROW(f * g, balid::order_mismatch);
  EXPECT_THROW(f.first_mismatch(g), balid::order_mismatch);
}

TEST(Egf, DiscriminantMismatchPropagates) {
  EgfSeries<QuadRat> f(QuadRat(Rational(0), Rational(0), Rational(5)), 3);
  EgfSeries<QuadRat> g(QuadRat(Rational(0), Rational(0), Rational(-1)), 3);
  EXPECT_THROW(f + g, balid::discriminant_mismatch);
}

TEST(Egf, ArgumentScaling) {
  auto scaled = egf_arg_scale(egf_exp_linear(Rational(1), 9), Rational(2));
  EXPECT_EQ(scaled, egf_exp_linear(Rational(2), 9));
}

TEST(Egf, DivRootOnPureSeries) {
  PolyQuad c = balid::pq_embed(Poly::monomial(1, Rational(6))) * balid::pq_root();
  auto sinh = egf_sinh_linear(c, 8);
  auto divided = egf_div_root(sinh);
  for (int n = 1; n <= 8; n += 2) {
    EXPECT_TRUE(divided.coeff(n).b().is_zero());
    EXPECT_EQ(divided.coeff(n).a(), sinh.coeff(n).b());
  }
  EXPECT_THROW(egf_div_root(egf_exp_linear(c, 8)), balid::not_invertible);
}

TEST(GfBuilders, LucasBalancingEvenStartsAtOne) {
  auto c2 = balid::build_lucas_balancing_even_gf(8);
  EXPECT_EQ(c2.coeff(0), balid::pq_scalar(Rational(1)));
}

TEST(GfBuilders, BalancingEvenMatchesSequences) {
  SequenceCache cache;
  auto b2 = balid::build_balancing_even_gf(8);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(b2.coeff(n), balid::pq_embed(cache.balancing_poly(2 * n))) << "n=" << n;
}

TEST(GfBuilders, EulerNumbersFromScaledHalfEvaluation) {
  SequenceCache cache;
  balid::GfParams params;
  params.x = Rational(1, 2);
  params.arg_scale = Rational(2);
  auto series = std::get<EgfSeries<Rational>>(
      balid::build_gf(balid::GfName::I, params, 10, cache));
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(series.coeff(n), Rational(cache.euler_number(n))) << "n=" << n;
}

TEST(GfBuilders, BernoulliNumbersFromZeroEvaluation) {
  SequenceCache cache;
  balid::GfParams params;
  params.x = Rational(0);
  auto series = std::get<EgfSeries<Rational>>(
      balid::build_gf(balid::GfName::H, params, 12, cache));
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(series.coeff(n), cache.bernoulli_number(n)) << n;
}

TEST(GfBuilders, LucasProgression) {
  SequenceCache cache;
  balid::GfParams params;
  params.j = 2;
  auto series =
      std::get<EgfSeries<QuadRat>>(balid::build_gf(balid::GfName::L, params, 10, cache));
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(series.coeff(n), QuadRat(Rational(cache.lucas(2 * n)), Rational(0), Rational(5)));
}

TEST(GfBuilders, UnknownNameRejected) {
  EXPECT_THROW(balid::parse_gf_name("nosuch"), balid::unknown_identity);
}

TEST(GfNegativeControl, DroppedSeriesTermIsDetected) {
  SequenceCache cache;
  auto c2 = balid::build_lucas_balancing_even_gf(4);
  c2.set_coeff(1, c2.coeff(1).zero_like());  // drop the z^1 term
  auto direct = balid::series_lucas_balancing(cache, 4, 0);
  auto mismatch = c2.first_mismatch(direct);
  ASSERT_TRUE(mismatch.has_value());
  EXPECT_EQ(*mismatch, 1);
}
