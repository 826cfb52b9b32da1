#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balid/error.hpp"
#include "balid/quadext.hpp"
#include "balid/rational.hpp"

namespace balid {

/// Truncated exponential generating function: coefficients a_0..a_N with
/// the series reading sum a_n z^n / n!.
///
/// Storing the a_n directly makes the product a binomial convolution
/// with integer weights, so no factorial ever lands in a denominator and
/// polynomial coefficient rings stay small.
template <class Ring>
class EgfSeries {
 public:
  EgfSeries(const Ring& model, int order) : a_(static_cast<std::size_t>(order) + 1, model.zero_like()) {
    if (order < 0) throw order_mismatch("EgfSeries: negative order");
  }
  explicit EgfSeries(std::vector<Ring> coeffs) : a_(std::move(coeffs)) {
    if (a_.empty()) throw order_mismatch("EgfSeries: empty coefficient list");
  }

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const Ring& coeff(int n) const { return a_[static_cast<std::size_t>(n)]; }
  void set_coeff(int n, Ring v) { a_[static_cast<std::size_t>(n)] = std::move(v); }

  friend EgfSeries operator+(const EgfSeries& f, const EgfSeries& g) {
    f.require_same_order(g);
    EgfSeries out = f;
    for (std::size_t n = 0; n < out.a_.size(); ++n) out.a_[n] = out.a_[n] + g.a_[n];
    return out;
  }
  friend EgfSeries operator-(const EgfSeries& f, const EgfSeries& g) {
    f.require_same_order(g);
    EgfSeries out = f;
    for (std::size_t n = 0; n < out.a_.size(); ++n) out.a_[n] = out.a_[n] - g.a_[n];
    return out;
  }

  /// (fg)_n = sum_k C(n,k) f_k g_{n-k}, truncated at the common order.
  friend EgfSeries operator*(const EgfSeries& f, const EgfSeries& g) {
    f.require_same_order(g);
    EgfSeries out(f.a_[0], f.order());
    for (int n = 0; n <= f.order(); ++n) {
      Ring acc = f.a_[0].zero_like();
      for (int k = 0; k <= n; ++k)
        acc = acc + (f.coeff(k) * g.coeff(n - k)).scale(Rational(binomial(n, k)));
      out.a_[static_cast<std::size_t>(n)] = acc;
    }
    return out;
  }

  /// Coefficientwise multiplication by a ring element (EGF linearity).
  friend EgfSeries operator*(const EgfSeries& f, const Ring& c) {
    EgfSeries out = f;
    for (auto& a : out.a_) a = a * c;
    return out;
  }

  EgfSeries scale(const Rational& r) const {
    EgfSeries out = *this;
    for (auto& a : out.a_) a = a.scale(r);
    return out;
  }

  friend bool operator==(const EgfSeries& f, const EgfSeries& g) {
    return !f.first_mismatch(g).has_value();
  }
  friend bool operator!=(const EgfSeries& f, const EgfSeries& g) { return !(f == g); }

  std::optional<int> first_mismatch(const EgfSeries& g) const {
    require_same_order(g);
    for (int n = 0; n <= order(); ++n)
      if (!(coeff(n) == g.coeff(n))) return n;
    return std::nullopt;
  }

  /// g with f*g = 1 up to the truncation order; needs a unit constant
  /// term. Triangular recurrence g_n = -a_0^{-1} sum_{k>=1} C(n,k) a_k g_{n-k}.
  EgfSeries recip() const {
    Ring c0inv = a_[0].inv();
    EgfSeries g(a_[0], order());
    g.a_[0] = c0inv;
    for (int n = 1; n <= order(); ++n) {
      Ring acc = a_[0].zero_like();
      for (int k = 1; k <= n; ++k)
        acc = acc + (coeff(k) * g.coeff(n - k)).scale(Rational(binomial(n, k)));
      g.a_[static_cast<std::size_t>(n)] = -(c0inv * acc);
    }
    return g;
  }

 private:
  void require_same_order(const EgfSeries& g) const {
    if (order() != g.order())
      throw order_mismatch("EgfSeries: orders " + std::to_string(order()) + " and " +
                           std::to_string(g.order()) + " differ");
  }

  std::vector<Ring> a_;
};

/// The constant series 1.
template <class Ring>
EgfSeries<Ring> egf_one(const Ring& model, int order) {
  EgfSeries<Ring> f(model, order);
  f.set_coeff(0, model.one_like());
  return f;
}

/// exp(c z): coefficients c^n.
template <class Ring>
EgfSeries<Ring> egf_exp_linear(const Ring& c, int order) {
  EgfSeries<Ring> f(c, order);
  Ring p = c.one_like();
  f.set_coeff(0, p);
  for (int n = 1; n <= order; ++n) {
    p = p * c;
    f.set_coeff(n, p);
  }
  return f;
}

/// cosh(c z): c^n at even n, 0 otherwise.
template <class Ring>
EgfSeries<Ring> egf_cosh_linear(const Ring& c, int order) {
  EgfSeries<Ring> f = egf_exp_linear(c, order);
  for (int n = 1; n <= order; n += 2) f.set_coeff(n, c.zero_like());
  return f;
}

/// sinh(c z): c^n at odd n, 0 otherwise.
template <class Ring>
EgfSeries<Ring> egf_sinh_linear(const Ring& c, int order) {
  EgfSeries<Ring> f = egf_exp_linear(c, order);
  for (int n = 0; n <= order; n += 2) f.set_coeff(n, c.zero_like());
  return f;
}

/// (e^z - 1)/z: coefficients 1/(n+1). Its reciprocal generates the
/// Bernoulli numbers.
template <class Ring>
EgfSeries<Ring> egf_expm1_over_z(const Ring& model, int order) {
  EgfSeries<Ring> f(model, order);
  for (int n = 0; n <= order; ++n) f.set_coeff(n, model.scalar_like(Rational(1, n + 1)));
  return f;
}

/// Coefficientwise division by the adjoined root; every coefficient must
/// be a pure multiple of it.
template <class Base>
EgfSeries<QuadExt<Base>> egf_div_root(const EgfSeries<QuadExt<Base>>& f) {
  EgfSeries<QuadExt<Base>> out = f;
  for (int n = 0; n <= f.order(); ++n) out.set_coeff(n, f.coeff(n).div_root());
  return out;
}

}  // namespace balid
