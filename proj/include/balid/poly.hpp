#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "balid/error.hpp"
#include "balid/rational.hpp"

namespace balid {

/// Dense univariate polynomial over Rational, coefficient index = degree.
/// Canonical form strips trailing zeros; the zero polynomial stores no
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

  static Poly x() { return monomial(1, Rational(1)); }
  static Poly monomial(std::size_t degree, Rational coeff) {
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly pow(unsigned long long e) const {
    Poly result = one_like();
    Poly base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Horner evaluation in any ring that embeds Rational.
  template <class Ring>
  Ring eval(const Ring& point) const {
    Ring acc = point.zero_like();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + point.scalar_like(c_[i]);
    return acc;
  }

  /// p(c0 + c1*x), exact affine substitution.
  Poly compose_affine(const Rational& c0, const Rational& c1) const {
    Poly lin(std::vector<Rational>{c0, c1});
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
  }

  bool is_unit() const { return c_.size() == 1; }
  Poly inv() const {
    if (!is_unit()) throw not_invertible("Poly: only nonzero constants are units");
    return Poly(c_[0].inv());
  }

  Poly scale(const Rational& r) const {
    if (r.is_zero()) return Poly();
    Poly out = *this;
    for (auto& c : out.c_) c = c * r;
    return out;
  }
  Poly zero_like() const { return Poly(); }
  Poly one_like() const { return Poly(Rational(1)); }
  Poly scalar_like(const Rational& r) const { return Poly(r); }

  /// "c0 + c1*x + ...", ascending powers, zero terms skipped.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational c = c_[i];
      if (out.empty()) {
        if (c.sign() < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
      }
      bool unit_coeff = c.is_one() && i > 0;
      if (!unit_coeff) out += c.str();
      if (i > 0) {
        if (!unit_coeff) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace balid
