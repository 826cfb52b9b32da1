#include <random>

#include <gtest/gtest.h>

#include "balid/poly.hpp"
#include "balid/quadext.hpp"
#include "balid/sequences.hpp"
#include "oracles.hpp"

using balid::imaginary_unit;
using balid::Poly;
using balid::QuadRat;
using balid::Rational;

TEST(Poly, Products) {
  Poly x = Poly::x();
  EXPECT_EQ(x * x, Poly::monomial(2, Rational(1)));
  Poly one_plus(std::vector<Rational>{Rational(1), Rational(1)});
  Poly one_minus(std::vector<Rational>{Rational(1), Rational(-1)});
  EXPECT_EQ(one_plus * one_minus,
            Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}));
}

TEST(Poly, BalancingProductFromRecurrence) {
  // Recurrence oracle gives B*_2 = 6x and C_2 = 18x^2 - 1.
  auto bal = oracles::balancing_coeffs(3, false);
  auto lucbal = oracles::balancing_coeffs(3, true);
  Poly b2(bal[2]);
  Poly c2(lucbal[2]);
  Poly expected(std::vector<Rational>{Rational(0), Rational(-6), Rational(0), Rational(108)});
  EXPECT_EQ(b2 * c2, expected);
  EXPECT_EQ((b2 * c2).str(), "-6*x + 108*x^3");
}

TEST(Poly, RationalEvaluation) {
  Poly p(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  EXPECT_EQ(p.eval(Rational(3)), Rational(8));

  auto lucbal = oracles::balancing_coeffs(4, true);
  EXPECT_EQ(Poly(lucbal[2]).eval(Rational(1)), Rational(17));
  EXPECT_EQ(Poly(lucbal[3]).eval(Rational(1)), Rational(99));

  // B*_2(1/2) = F_4 / F_2 = 3.
  auto bal = oracles::balancing_coeffs(3, false);
  EXPECT_EQ(Poly(bal[2]).eval(Rational(1, 2)), Rational(3));
}

TEST(Poly, QuadraticExtensionEvaluation) {
  Poly sq = Poly::monomial(2, Rational(1));
  EXPECT_EQ(sq.eval(imaginary_unit()), QuadRat(Rational(-1), Rational(0), Rational(-1)));

  // E_1(x) = x - 1/2 at alpha is sqrt5 / 2.
  Poly e1(std::vector<Rational>{Rational(-1, 2), Rational(1)});
  EXPECT_EQ(e1.eval(balid::golden_alpha()), QuadRat(Rational(0), Rational(1, 2), Rational(5)));

  // B*_3(x) = 36x^2 - 1 at i/6 gives -2.
  Poly b3(std::vector<Rational>{Rational(-1), Rational(0), Rational(36)});
  QuadRat pt(Rational(0), Rational(1, 6), Rational(-1));
  EXPECT_EQ(b3.eval(pt), QuadRat(Rational(-2), Rational(0), Rational(-1)));
}

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rational(balid::Integer(num(rng)), balid::Integer(den(rng)));
  return Poly(std::move(c));
}

}  // namespace

TEST(Poly, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 8);
    Poly q = random_poly(rng, 8);
    Rational t(balid::Integer(i - 50), balid::Integer(7));
    EXPECT_EQ((p * q).eval(t), p.eval(t) * q.eval(t));
    EXPECT_EQ((p + q).eval(t), p.eval(t) + q.eval(t));

    QuadRat a = balid::golden_alpha();
    EXPECT_EQ((p * q).eval(a), p.eval(a) * q.eval(a));
    QuadRat im = imaginary_unit();
    EXPECT_EQ((p * q).eval(im), p.eval(im) * q.eval(im));
  }
}

TEST(Poly, CanonicalForm) {
  Poly padded(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
  EXPECT_EQ(padded.degree(), 1);
  EXPECT_EQ(Poly(padded).degree(), 1);  // idempotent
  Poly p(std::vector<Rational>{Rational(3), Rational(-1, 2)});
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ((p + (-p)).degree(), -1);
  EXPECT_EQ(Poly().str(), "0");
}

TEST(Poly, DegreeOfProductAdds) {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 6);
    Poly q = random_poly(rng, 6);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(Poly, ComposeAffine) {
  Poly sq = Poly::monomial(2, Rational(1));
  EXPECT_EQ(sq.compose_affine(Rational(1), Rational(1)),
            Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(1)}));
  EXPECT_EQ(sq.compose_affine(Rational(0), Rational(3)), Poly::monomial(2, Rational(9)));
}

TEST(Poly, OnlyConstantsAreUnits) {
  EXPECT_EQ(Poly(Rational(2, 3)).inv(), Poly(Rational(3, 2)));
  EXPECT_THROW(Poly::x().inv(), balid::not_invertible);
  EXPECT_THROW(Poly().inv(), balid::not_invertible);
}
