#include <gtest/gtest.h>

#include "balid/sequences.hpp"
#include "oracles.hpp"

using balid::Integer;
using balid::Poly;
using balid::PolyQuad;
using balid::QuadRat;
using balid::Rational;
using balid::SequenceCache;

TEST(Sequences, InitialConditions) {
  SequenceCache c;
  EXPECT_EQ(c.fibonacci(0), 0);
  EXPECT_EQ(c.fibonacci(1), 1);
  EXPECT_EQ(c.lucas(0), 2);
  EXPECT_EQ(c.lucas(1), 1);
  EXPECT_TRUE(c.balancing_poly(0).is_zero());
  EXPECT_EQ(c.balancing_poly(1), Poly(Rational(1)));
  EXPECT_EQ(c.lucas_balancing_poly(0), Poly(Rational(1)));
  EXPECT_EQ(c.lucas_balancing_poly(1), Poly::monomial(1, Rational(3)));
}

TEST(Sequences, FibonacciLucasAgainstUnrolledRecurrence) {
  SequenceCache c;
  EXPECT_EQ(c.fibonacci(10), 55);
  for (long long n = 0; n <= 40; ++n) {
    EXPECT_EQ(c.fibonacci(n), oracles::fib(n));
    EXPECT_EQ(c.lucas(n), oracles::lucas(n));
  }
}

TEST(Sequences, NegativeIndicesRejected) {
  SequenceCache c;
  EXPECT_THROW(c.fibonacci(-1), balid::negative_index);
  EXPECT_THROW(c.lucas(-2), balid::negative_index);
  EXPECT_THROW(c.balancing_poly(-1), balid::negative_index);
  EXPECT_THROW(c.bernoulli_number(-1), balid::negative_index);
  EXPECT_THROW(c.euler_number(-3), balid::negative_index);
  EXPECT_THROW(c.golden_power(-1, +1), balid::negative_index);
}

TEST(Sequences, BalancingPolynomials) {
  SequenceCache c;
  EXPECT_EQ(c.balancing_poly(2), Poly::monomial(1, Rational(6)));
  EXPECT_EQ(c.lucas_balancing_poly(2),
            Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  EXPECT_EQ(c.balancing_poly(4),
            Poly(std::vector<Rational>{Rational(0), Rational(-12), Rational(0), Rational(216)}));
  auto bal = oracles::balancing_coeffs(21, false);
  auto lucbal = oracles::balancing_coeffs(21, true);
  for (long long n = 0; n <= 20; ++n) {
    EXPECT_EQ(c.balancing_poly(n), Poly(bal[static_cast<std::size_t>(n)]));
    EXPECT_EQ(c.lucas_balancing_poly(n), Poly(lucbal[static_cast<std::size_t>(n)]));
  }
}

TEST(Sequences, LambdaPowersDecompose) {
  SequenceCache c;
  EXPECT_EQ(c.lambda_power(0), balid::lambda_base().one_like());
  EXPECT_EQ(c.lambda_power(1), balid::lambda_base());
  for (long long n = 0; n <= 40; ++n) {
    const PolyQuad& ln = c.lambda_power(n);
    EXPECT_EQ(ln.a(), c.lucas_balancing_poly(n)) << "n=" << n;
    EXPECT_EQ(ln.b(), c.balancing_poly(n)) << "n=" << n;
  }
}

TEST(Sequences, BernoulliNumbers) {
  SequenceCache c;
  EXPECT_EQ(c.bernoulli_number(0), Rational(1));
  EXPECT_EQ(c.bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(c.bernoulli_number(2), Rational(1, 6));
  EXPECT_EQ(c.bernoulli_number(4), Rational(-1, 30));
  EXPECT_EQ(c.bernoulli_number(7), Rational(0));
  EXPECT_EQ(c.bernoulli_number(12), Rational(-691, 2730));
  // Odd entries vanish as recurrence outcomes, not by construction.
  for (long long n = 3; n <= 29; n += 2) EXPECT_TRUE(c.bernoulli_number(n).is_zero());
  // Independent scheme; its convention has B_1 = +1/2.
  auto at = oracles::bernoulli_akiyama_tanigawa(31);
  for (long long n = 0; n <= 30; ++n) {
    Rational expected = n == 1 ? -at[1] : at[static_cast<std::size_t>(n)];
    EXPECT_EQ(c.bernoulli_number(n), expected) << "n=" << n;
  }
}

TEST(Sequences, EulerNumbers) {
  SequenceCache c;
  EXPECT_EQ(c.euler_number(0), 1);
  EXPECT_EQ(c.euler_number(2), -1);
  EXPECT_EQ(c.euler_number(4), 5);
  EXPECT_EQ(c.euler_number(5), 0);
  EXPECT_EQ(c.euler_number(10), -50521);
  for (long long n = 1; n <= 29; n += 2) EXPECT_EQ(c.euler_number(n), 0);
  // Entringer-triangle oracle: E_{2m} = (-1)^m zigzag(2m).
  auto zig = oracles::euler_zigzag(31);
  for (long long m = 0; 2 * m <= 30; ++m) {
    Integer expected = zig[static_cast<std::size_t>(2 * m)];
    if (m % 2 != 0) expected = -expected;
    EXPECT_EQ(c.euler_number(2 * m), expected) << "n=" << 2 * m;
  }
}

TEST(Sequences, PolynomialFamilies) {
  SequenceCache c;
  EXPECT_EQ(c.bernoulli_poly(0), Poly(Rational(1)));
  EXPECT_EQ(c.euler_poly(1), Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
  EXPECT_EQ(c.bernoulli_poly(2),
            Poly(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
  EXPECT_EQ(c.euler_poly(2), Poly(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}));
  // B_n(0) recovers the Bernoulli numbers.
  for (long long n = 0; n <= 20; ++n)
    EXPECT_EQ(c.bernoulli_poly(n).eval(Rational(0)), c.bernoulli_number(n));
}

TEST(Sequences, EulerReflection) {
  SequenceCache c;
  for (long long n = 0; n <= 12; ++n) {
    Poly reflected = c.euler_poly(n).compose_affine(Rational(1), Rational(-1));
    Poly expected = n % 2 == 0 ? c.euler_poly(n) : -c.euler_poly(n);
    EXPECT_EQ(reflected, expected) << "n=" << n;
  }
}

TEST(Sequences, EulerNumberFromHalfEvaluation) {
  SequenceCache c;
  for (long long n = 0; n <= 30; ++n) {
    Rational expected = Rational(2).pow(n) * c.euler_poly(n).eval(Rational(1, 2));
    EXPECT_EQ(Rational(c.euler_number(n)), expected) << "n=" << n;
  }
}

TEST(Sequences, EulerAtZeroClosedForm) {
  SequenceCache c;
  EXPECT_EQ(c.euler_at_zero(0), Rational(1));
  EXPECT_EQ(c.euler_at_zero(1), Rational(-1, 2));
  EXPECT_EQ(c.euler_at_zero(2), Rational(0));
  for (long long n = 0; n <= 30; ++n)
    EXPECT_EQ(c.euler_at_zero(n), c.euler_poly(n).eval(Rational(0))) << "n=" << n;
}

TEST(Sequences, GoldenPowers) {
  SequenceCache c;
  EXPECT_EQ(c.golden_power(0, +1), balid::golden_alpha().one_like());
  EXPECT_EQ(c.golden_power(1, +1), balid::golden_alpha());
  EXPECT_EQ(c.golden_power(1, -1), balid::golden_beta());
  EXPECT_EQ(c.golden_power(7, +1), QuadRat(Rational(29, 2), Rational(13, 2), Rational(5)));
  for (long long n = 0; n <= 30; ++n) {
    // Binet pair multiplies to (-1)^n.
    QuadRat prod = c.golden_power(n, +1) * c.golden_power(n, -1);
    Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    EXPECT_EQ(prod, QuadRat(sign, Rational(0), Rational(5))) << "n=" << n;
    // Same value through repeated multiplication.
    EXPECT_EQ(c.golden_power(n, +1), balid::golden_alpha().pow(static_cast<unsigned>(n)));
    EXPECT_EQ(c.golden_power(n, -1), balid::golden_beta().pow(static_cast<unsigned>(n)));
  }
}

TEST(Sequences, FibonacciLucasIdentities) {
  SequenceCache c;
  for (long long n = 0; n <= 30; ++n) {
    Integer sign4 = n % 2 == 0 ? Integer(4) : Integer(-4);
    Integer sign2 = n % 2 == 0 ? Integer(2) : Integer(-2);
    EXPECT_EQ(c.lucas(n) * c.lucas(n) - 5 * c.fibonacci(n) * c.fibonacci(n), sign4);
    EXPECT_EQ(c.lucas(n) * c.lucas(n) - c.lucas(2 * n), sign2);
    EXPECT_EQ(c.fibonacci(2 * n), c.fibonacci(n) * c.lucas(n));
    if (n >= 1) EXPECT_EQ(5 * c.fibonacci(n), c.lucas(n + 1) + c.lucas(n - 1));
  }
}

TEST(Sequences, CacheTransparency) {
  SequenceCache warm;
  for (long long n = 0; n <= 25; ++n) {
    warm.fibonacci(n);
    warm.bernoulli_number(n);
    warm.euler_poly(n);
  }
  SequenceCache cold;
  EXPECT_EQ(warm.fibonacci(25), cold.fibonacci(25));
  EXPECT_EQ(warm.bernoulli_number(24), cold.bernoulli_number(24));
  EXPECT_EQ(warm.euler_poly(13), cold.euler_poly(13));
  EXPECT_EQ(warm.lambda_power(9), cold.lambda_power(9));
}
