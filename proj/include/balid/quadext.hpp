#pragma once

#include <string>
#include <utility>

#include "balid/error.hpp"
#include "balid/rational.hpp"

namespace balid {

/// Element a + b*y of the quadratic extension Ring[y]/(y^2 - d).
///
/// d travels with each element and must agree between the operands of
/// every binary operation; three different discriminants (5, -1 and
/// 9x^2-1) coexist in one program, so it cannot be a type parameter.
template <class Ring>
class QuadExt {
 public:
  QuadExt(Ring a, Ring b, Ring d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  /// The adjoined root y itself.
  static QuadExt root(const Ring& d) { return QuadExt(d.zero_like(), d.one_like(), d); }
  static QuadExt from_base(Ring a, const Ring& d) {
    Ring z = a.zero_like();
    return QuadExt(std::move(a), std::move(z), d);
  }

  const Ring& a() const { return a_; }
  const Ring& b() const { return b_; }
  const Ring& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& u, const QuadExt& v) {
    u.require_same_d(v);
    return QuadExt(u.a_ + v.a_, u.b_ + v.b_, u.d_);
  }
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v) {
    u.require_same_d(v);
    return QuadExt(u.a_ - v.a_, u.b_ - v.b_, u.d_);
  }
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v) {
    u.require_same_d(v);
    return QuadExt(u.a_ * v.a_ + u.b_ * v.b_ * u.d_, u.a_ * v.b_ + v.a_ * u.b_, u.d_);
  }
  friend bool operator==(const QuadExt& u, const QuadExt& v) {
    return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend bool operator!=(const QuadExt& u, const QuadExt& v) { return !(u == v); }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }

  /// a^2 - b^2 d, an element of the base ring. Multiplicative.
  Ring norm() const { return a_ * a_ - b_ * b_ * d_; }

  QuadExt inv() const {
    Ring n = norm();
    Ring ninv = n.inv();  // throws not_invertible when the norm is not a unit
    return QuadExt(a_ * ninv, -(b_ * ninv), d_);
  }

  QuadExt pow(unsigned long long e) const {
    QuadExt result = one_like();
    QuadExt base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// (a + b*y)/y for pure-y elements: (0 + b*y)/y = b. The general case
  /// would need d | a and never occurs in the series this supports.
  QuadExt div_root() const {
    if (!a_.is_zero())
      throw not_invertible("QuadExt::div_root: element is not a pure multiple of the root");
    return QuadExt(b_, a_, d_);
  }

  QuadExt scale(const Rational& r) const { return QuadExt(a_.scale(r), b_.scale(r), d_); }
  QuadExt zero_like() const { return QuadExt(a_.zero_like(), a_.zero_like(), d_); }
  QuadExt one_like() const { return QuadExt(a_.one_like(), a_.zero_like(), d_); }
  QuadExt scalar_like(const Rational& r) const {
    return QuadExt(a_.scalar_like(r), a_.zero_like(), d_);
  }

  std::string str() const {
    return a_.str() + " + (" + b_.str() + ")*sqrt(" + d_.str() + ")";
  }

 private:
  void require_same_d(const QuadExt& o) const {
    if (!(d_ == o.d_))
      throw discriminant_mismatch("QuadExt: mixed discriminants " + d_.str() + " and " +
                                  o.d_.str());
  }

  Ring a_;
  Ring b_;
  Ring d_;
};

}  // namespace balid
