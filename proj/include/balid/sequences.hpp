#pragma once

#include <cstddef>
#include <vector>

#include "balid/poly.hpp"
#include "balid/quadext.hpp"
#include "balid/rational.hpp"

namespace balid {

using QuadRat = QuadExt<Rational>;
using PolyQuad = QuadExt<Poly>;

/// alpha = (1 + sqrt5)/2, the golden ratio, as an exact quad(5) element.
inline QuadRat golden_alpha() { return QuadRat(Rational(1, 2), Rational(1, 2), Rational(5)); }
/// beta = (1 - sqrt5)/2 = -1/alpha.
inline QuadRat golden_beta() { return QuadRat(Rational(1, 2), Rational(-1, 2), Rational(5)); }
inline QuadRat sqrt5() { return QuadRat(Rational(0), Rational(1), Rational(5)); }
/// i = sqrt(-1) as a quad(-1) element.
inline QuadRat imaginary_unit() { return QuadRat(Rational(0), Rational(1), Rational(-1)); }

/// 9x^2 - 1, the square of the adjoined root in the balancing ring.
inline Poly balancing_disc() {
  return Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(9)});
}
/// lambda(x) = 3x + sqrt(9x^2 - 1), the dominant characteristic root of
/// w_n = 6x w_{n-1} - w_{n-2}.
inline PolyQuad lambda_base() {
  return PolyQuad(Poly::monomial(1, Rational(3)), Poly(Rational(1)), balancing_disc());
}

/// Memoized generators for every number and polynomial family.
///
/// A cache is single-writer: share one across threads only after warming
/// it up, or give each worker its own. Results are identical either way
/// because every entry is a pure function of its index.
class SequenceCache {
 public:
  const Integer& fibonacci(long long n) {
    check_index(n, "fibonacci");
    fill_linear(fib_, Integer(0), Integer(1), n);
    return fib_[static_cast<std::size_t>(n)];
  }

  const Integer& lucas(long long n) {
    check_index(n, "lucas");
    fill_linear(luc_, Integer(2), Integer(1), n);
    return luc_[static_cast<std::size_t>(n)];
  }

  /// B*_n(x): w_n = 6x w_{n-1} - w_{n-2} with B*_0 = 0, B*_1 = 1.
  const Poly& balancing_poly(long long n) {
    check_index(n, "balancing_poly");
    fill_balancing(bal_, Poly(), Poly(Rational(1)), n);
    return bal_[static_cast<std::size_t>(n)];
  }

  /// C_n(x): same recurrence with C_0 = 1, C_1 = 3x.
  const Poly& lucas_balancing_poly(long long n) {
    check_index(n, "lucas_balancing_poly");
    fill_balancing(lucbal_, Poly(Rational(1)), Poly::monomial(1, Rational(3)), n);
    return lucbal_[static_cast<std::size_t>(n)];
  }

  /// lambda(x)^n; componentwise equal to (C_n(x), B*_n(x)).
  const PolyQuad& lambda_power(long long n) {
    check_index(n, "lambda_power");
    while (lambda_.size() <= static_cast<std::size_t>(n))
      lambda_.push_back(lambda_base().pow(lambda_.size()));
    return lambda_[static_cast<std::size_t>(n)];
  }

  /// B_n in the convention with B_1 = -1/2, via the recurrence
  /// sum_{k=0}^{n} C(n+1,k) B_k = 0 solved for B_n.
  const Rational& bernoulli_number(long long n) {
    check_index(n, "bernoulli_number");
    while (bern_.size() <= static_cast<std::size_t>(n)) {
      long long m = static_cast<long long>(bern_.size());
      if (m == 0) {
        bern_.push_back(Rational(1));
        continue;
      }
      Rational acc;
      for (long long k = 0; k < m; ++k)
        acc += bern_[static_cast<std::size_t>(k)] * Rational(binomial(m + 1, k));
      bern_.push_back(-acc / Rational(m + 1));
    }
    return bern_[static_cast<std::size_t>(n)];
  }

  /// E_n; odd indices are 0 by parity, even ones come from
  /// sum_{k=0}^{m} C(2m,2k) E_{2k} = 0 for m >= 1.
  Integer euler_number(long long n) {
    check_index(n, "euler_number");
    if (n % 2 != 0) return Integer(0);
    long long m = n / 2;
    while (euler_even_.size() <= static_cast<std::size_t>(m)) {
      long long mm = static_cast<long long>(euler_even_.size());
      if (mm == 0) {
        euler_even_.push_back(Integer(1));
        continue;
      }
      Integer acc = 0;
      for (long long k = 0; k < mm; ++k)
        acc += binomial(2 * mm, 2 * k) * euler_even_[static_cast<std::size_t>(k)];
      euler_even_.push_back(-acc);
    }
    return euler_even_[static_cast<std::size_t>(m)];
  }

  /// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
  const Poly& bernoulli_poly(long long n) {
    check_index(n, "bernoulli_poly");
    while (bernpoly_.size() <= static_cast<std::size_t>(n)) {
      long long m = static_cast<long long>(bernpoly_.size());
      std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
      for (long long k = 0; k <= m; ++k)
        c[static_cast<std::size_t>(m - k)] = Rational(binomial(m, k)) * bernoulli_number(k);
      bernpoly_.push_back(Poly(std::move(c)));
    }
    return bernpoly_[static_cast<std::size_t>(n)];
  }

  /// E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^{n-k}.
  const Poly& euler_poly(long long n) {
    check_index(n, "euler_poly");
    while (eulerpoly_.size() <= static_cast<std::size_t>(n)) {
      long long m = static_cast<long long>(eulerpoly_.size());
      Poly half_shift(std::vector<Rational>{Rational(-1, 2), Rational(1)});
      std::vector<Poly> pw(static_cast<std::size_t>(m) + 1);
      pw[0] = Poly(Rational(1));
      for (long long i = 1; i <= m; ++i)
        pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * half_shift;
      Poly acc;
      for (long long k = 0; k <= m; ++k) {
        Rational w = Rational(binomial(m, k)) * Rational(euler_number(k), int_pow(Integer(2), k));
        acc = acc + pw[static_cast<std::size_t>(m - k)].scale(w);
      }
      eulerpoly_.push_back(acc);
    }
    return eulerpoly_[static_cast<std::size_t>(n)];
  }

  /// E_n(0) = 2(1 - 2^{n+1}) B_{n+1} / (n+1), closed form.
  Rational euler_at_zero(long long n) {
    check_index(n, "euler_at_zero");
    Rational factor(Integer(2) * (1 - int_pow(Integer(2), n + 1)), Integer(n + 1));
    return factor * bernoulli_number(n + 1);
  }

  /// alpha^n or beta^n in Binet form (L_n +- F_n sqrt5)/2.
  QuadRat golden_power(long long n, int sign) {
    check_index(n, "golden_power");
    Rational a(lucas(n), Integer(2));
    Rational b(fibonacci(n), Integer(2));
    return QuadRat(a, sign >= 0 ? b : -b, Rational(5));
  }

 private:
  static void check_index(long long n, const char* what) {
    if (n < 0) throw negative_index(std::string(what) + ": negative index");
  }

  static void fill_linear(std::vector<Integer>& memo, Integer u0, Integer u1, long long n) {
    if (memo.empty()) {
      memo.push_back(std::move(u0));
      memo.push_back(std::move(u1));
    }
    while (memo.size() <= static_cast<std::size_t>(n))
      memo.push_back(memo[memo.size() - 1] + memo[memo.size() - 2]);
  }

  static void fill_balancing(std::vector<Poly>& memo, Poly w0, Poly w1, long long n) {
    if (memo.empty()) {
      memo.push_back(std::move(w0));
      memo.push_back(std::move(w1));
    }
    Poly six_x = Poly::monomial(1, Rational(6));
    while (memo.size() <= static_cast<std::size_t>(n))
      memo.push_back(six_x * memo[memo.size() - 1] - memo[memo.size() - 2]);
  }

  std::vector<Integer> fib_;
  std::vector<Integer> luc_;
  std::vector<Poly> bal_;
  std::vector<Poly> lucbal_;
  std::vector<PolyQuad> lambda_;
  std::vector<Rational> bern_;
  std::vector<Integer> euler_even_;
  std::vector<Poly> bernpoly_;
  std::vector<Poly> eulerpoly_;
};

}  // namespace balid
