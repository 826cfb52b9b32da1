#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "balid/error.hpp"

namespace balid {

using Integer = boost::multiprecision::cpp_int;

inline Integer int_pow(const Integer& base, unsigned long long e) {
  Integer result = 1;
  Integer b = base;
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

/// C(n,k), exact; 0 outside 0 <= k <= n so that out-of-range summation
/// terms vanish instead of being special-cased at call sites.
inline Integer binomial(long long n, long long k) {
  if (n < 0) throw negative_index("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

/// Reduced fraction over arbitrary-precision integers.
/// Invariant: gcd(|num|, den) = 1, den > 0, zero is 0/1. Equality is
/// therefore structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw not_invertible("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  Rational inv() const {
    if (is_zero()) throw not_invertible("Rational: zero has no inverse");
    return *this < 0 ? Rational(unchecked{}, -den_, -num_) : Rational(unchecked{}, den_, num_);
  }

  /// Integer power; negative exponents invert (and reject zero base).
  Rational pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    return Rational(unchecked{}, int_pow(num_, static_cast<unsigned long long>(e)),
                    int_pow(den_, static_cast<unsigned long long>(e)));
  }

  // Uniform ring hooks shared with Poly and QuadExt, so generic series
  // and evaluation code can stay agnostic of the coefficient ring.
  Rational scale(const Rational& r) const { return *this * r; }
  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational scalar_like(const Rational& r) const { return r; }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  struct unchecked {};
  Rational(unchecked, Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}

  friend bool operator<(const Rational& a, long long b) { return a.num_ < b * a.den_; }

  void normalize() {
    if (den_ == 0) throw not_invertible("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }
  void reduce() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

}  // namespace balid
