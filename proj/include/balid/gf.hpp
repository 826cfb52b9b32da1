#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "balid/egf.hpp"
#include "balid/error.hpp"
#include "balid/sequences.hpp"

namespace balid {

// ---------------------------------------------------------------------------
// Ring shorthands for the two symbolic quadratic extensions in use:
// Poly[y]/(y^2 - (9x^2-1)) and Poly[y]/(y^2 - 5).

inline Poly poly_x() { return Poly::x(); }

inline PolyQuad pq_embed(Poly p) { return PolyQuad::from_base(std::move(p), balancing_disc()); }
inline PolyQuad pq_scalar(const Rational& r) { return pq_embed(Poly(r)); }
inline PolyQuad pq_root() { return PolyQuad::root(balancing_disc()); }

inline PolyQuad pq5_embed(Poly p) { return PolyQuad::from_base(std::move(p), Poly(Rational(5))); }
inline PolyQuad pq5_scalar(const Rational& r) { return pq5_embed(Poly(r)); }
inline PolyQuad pq5_root() { return PolyQuad::root(Poly(Rational(5))); }

/// Substitute z -> c z: coefficient n picks up a factor c^n.
template <class Ring>
EgfSeries<Ring> egf_arg_scale(const EgfSeries<Ring>& f, const Ring& c) {
  EgfSeries<Ring> out = f;
  Ring p = c.one_like();
  for (int n = 1; n <= f.order(); ++n) {
    p = p * c;
    out.set_coeff(n, f.coeff(n) * p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form builders. All are assembled from exp/cosh/sinh/recip with
// linear arguments, which is everything the functional equations need.

/// 2 e^{x c z} / (e^{c z} + 1), the Euler-polynomial EGF with argument c z.
template <class Ring>
EgfSeries<Ring> build_euler_gf(const Ring& x, const Ring& c, int order) {
  auto denom = egf_exp_linear(c, order) + egf_one(c, order);
  return (egf_exp_linear(x * c, order) * denom.recip()).scale(Rational(2));
}

/// c z e^{x c z} / (e^{c z} - 1), the Bernoulli-polynomial EGF with
/// argument c z, built through (e^{cz} - 1)/(cz) to keep a unit constant.
template <class Ring>
EgfSeries<Ring> build_bernoulli_gf(const Ring& x, const Ring& c, int order) {
  auto base = egf_arg_scale(egf_expm1_over_z(c, order), c);
  return egf_exp_linear(x * c, order) * base.recip();
}

/// EGF of even-indexed balancing polynomials:
/// e^{(18x^2-1)z} sinh(6x sqrt(9x^2-1) z) / sqrt(9x^2-1).
inline EgfSeries<PolyQuad> build_balancing_even_gf(int order) {
  Poly x = poly_x();
  PolyQuad drift = pq_embed(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  PolyQuad swing = pq_embed(x.scale(Rational(6))) * pq_root();
  return egf_exp_linear(drift, order) * egf_div_root(egf_sinh_linear(swing, order));
}

/// EGF of odd-indexed balancing polynomials.
inline EgfSeries<PolyQuad> build_balancing_odd_gf(int order) {
  Poly x = poly_x();
  PolyQuad drift = pq_embed(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  PolyQuad swing = pq_embed(x.scale(Rational(6))) * pq_root();
  auto part = egf_div_root(egf_sinh_linear(swing, order)) * pq_embed(x.scale(Rational(3))) +
              egf_cosh_linear(swing, order);
  return egf_exp_linear(drift, order) * part;
}

/// EGF of even-indexed Lucas-balancing polynomials:
/// e^{(18x^2-1)z} cosh(6x sqrt(9x^2-1) z).
inline EgfSeries<PolyQuad> build_lucas_balancing_even_gf(int order) {
  Poly x = poly_x();
  PolyQuad drift = pq_embed(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  PolyQuad swing = pq_embed(x.scale(Rational(6))) * pq_root();
  return egf_exp_linear(drift, order) * egf_cosh_linear(swing, order);
}

/// EGF of odd-indexed Lucas-balancing polynomials.
inline EgfSeries<PolyQuad> build_lucas_balancing_odd_gf(int order) {
  Poly x = poly_x();
  PolyQuad drift = pq_embed(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  PolyQuad swing = pq_embed(x.scale(Rational(6))) * pq_root();
  auto part = egf_cosh_linear(swing, order) * pq_embed(x.scale(Rational(3))) +
              egf_sinh_linear(swing, order) * pq_root();
  return egf_exp_linear(drift, order) * part;
}

/// EGF of the Lucas progression (L_{jn})_n over quad(5):
/// 2 e^{(F_j/2 + F_{j-1})z} cosh(sqrt5 F_j z / 2).
inline EgfSeries<QuadRat> build_lucas_progression_gf(long long j, int order,
                                                     SequenceCache& cache) {
  if (j < 1) throw domain_violation("lucas progression: j must be >= 1");
  Rational fj(cache.fibonacci(j));
  Rational fj1(cache.fibonacci(j - 1));
  QuadRat drift(fj * Rational(1, 2) + fj1, Rational(0), Rational(5));
  QuadRat swing(Rational(0), fj * Rational(1, 2), Rational(5));
  return (egf_exp_linear(drift, order) * egf_cosh_linear(swing, order)).scale(Rational(2));
}

// ---------------------------------------------------------------------------
// Series assembled directly from sequence coefficients; the independent
// side of every definitional equality.

inline EgfSeries<PolyQuad> series_balancing(SequenceCache& cache, int order, int parity) {
  EgfSeries<PolyQuad> f(pq_scalar(Rational(0)), order);
  for (int n = 0; n <= order; ++n) f.set_coeff(n, pq_embed(cache.balancing_poly(2 * n + parity)));
  return f;
}

inline EgfSeries<PolyQuad> series_lucas_balancing(SequenceCache& cache, int order, int parity) {
  EgfSeries<PolyQuad> f(pq_scalar(Rational(0)), order);
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, pq_embed(cache.lucas_balancing_poly(2 * n + parity)));
  return f;
}

inline EgfSeries<Rational> series_bernoulli_at(SequenceCache& cache, const Rational& x0,
                                               const Rational& arg_scale, int order) {
  EgfSeries<Rational> f(Rational(0), order);
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, cache.bernoulli_poly(n).eval(x0) * arg_scale.pow(n));
  return f;
}

inline EgfSeries<Rational> series_euler_at(SequenceCache& cache, const Rational& x0,
                                           const Rational& arg_scale, int order) {
  EgfSeries<Rational> f(Rational(0), order);
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, cache.euler_poly(n).eval(x0) * arg_scale.pow(n));
  return f;
}

inline EgfSeries<QuadRat> series_lucas_progression(SequenceCache& cache, long long j, int order) {
  EgfSeries<QuadRat> f(QuadRat(Rational(0), Rational(0), Rational(5)), order);
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, QuadRat(Rational(cache.lucas(j * n)), Rational(0), Rational(5)));
  return f;
}

// ---------------------------------------------------------------------------
// Unified builder surface keyed by name.

enum class GfName { H, I, b1, b2, c1, c2, L };

inline GfName parse_gf_name(const std::string& s) {
  if (s == "H") return GfName::H;
  if (s == "I") return GfName::I;
  if (s == "b1") return GfName::b1;
  if (s == "b2") return GfName::b2;
  if (s == "c1") return GfName::c1;
  if (s == "c2") return GfName::c2;
  if (s == "L") return GfName::L;
  throw unknown_identity("generating function " + s);
}

struct GfParams {
  std::optional<Rational> x;      // sampled evaluation point; symbolic when absent
  Rational arg_scale = Rational(1);  // z -> (arg_scale) z, H and I only
  long long j = 1;                // L only
};

using GfSeries = std::variant<EgfSeries<Rational>, EgfSeries<QuadRat>, EgfSeries<PolyQuad>>;

inline GfSeries build_gf(GfName name, const GfParams& params, int order, SequenceCache& cache) {
  switch (name) {
    case GfName::b1:
      return build_balancing_odd_gf(order);
    case GfName::b2:
      return build_balancing_even_gf(order);
    case GfName::c1:
      return build_lucas_balancing_odd_gf(order);
    case GfName::c2:
      return build_lucas_balancing_even_gf(order);
    case GfName::L:
      return build_lucas_progression_gf(params.j, order, cache);
    case GfName::H:
      if (params.x)
        return build_bernoulli_gf(*params.x, params.arg_scale, order);
      return build_bernoulli_gf(pq_embed(poly_x()), pq_scalar(params.arg_scale), order);
    case GfName::I:
      if (params.x)
        return build_euler_gf(*params.x, params.arg_scale, order);
      return build_euler_gf(pq_embed(poly_x()), pq_scalar(params.arg_scale), order);
  }
  throw unknown_identity("generating function");
}

// ---------------------------------------------------------------------------
// Functional-equation checks. Each check builds both sides through
// different primitive pipelines and compares coefficientwise; failure is
// a result, not an error.

struct GfCheckResult {
  std::string id;
  int order = 0;
  bool pass = false;
  int first_fail_order = -1;
  std::string detail;
};

struct GfEquation {
  std::string id;
  std::string description;
  int default_order;
  std::function<GfCheckResult(int, SequenceCache&)> run;
};

namespace detail {

template <class Ring>
void fold_mismatch(GfCheckResult& r, const EgfSeries<Ring>& lhs, const EgfSeries<Ring>& rhs,
                   const std::string& stage) {
  auto m = lhs.first_mismatch(rhs);
  if (m && (r.pass || *m < r.first_fail_order)) {
    r.pass = false;
    r.first_fail_order = *m;
    r.detail = stage;
  }
}

inline GfCheckResult fresh(const std::string& id, int order) {
  GfCheckResult r;
  r.id = id;
  r.order = order;
  r.pass = true;
  return r;
}

}  // namespace detail

inline const std::vector<GfEquation>& gf_equations() {
  static const std::vector<GfEquation> table = [] {
    std::vector<GfEquation> eqs;
    Poly x = poly_x();
    // 18x^2 - 1 and its friends, shared by most equations below.
    Poly drift_poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)});

    eqs.push_back(
        {"thm1_tanh", "I(0, 12x sqrt(9x^2-1) z) = 1 - tanh(6x sqrt(9x^2-1) z)", 16,
         [x](int order, SequenceCache&) {
           auto r = detail::fresh("thm1_tanh", order);
           PolyQuad arg = pq_embed(x.scale(Rational(12))) * pq_root();
           PolyQuad half_arg = pq_embed(x.scale(Rational(6))) * pq_root();
           auto lhs = build_euler_gf(pq_scalar(Rational(0)), arg, order);
           auto tanh = egf_sinh_linear(half_arg, order) * egf_cosh_linear(half_arg, order).recip();
           auto rhs = egf_one(half_arg, order) - tanh;
           detail::fold_mismatch(r, lhs, rhs, "recip pipeline vs tanh pipeline");
           return r;
         }});

    eqs.push_back(
        {"thm1_chain",
         "c2 * I(0, 12x sqrt(9x^2-1) z) = e^{(18x^2-1)z}(cosh - sinh) = c2 - sqrt(9x^2-1) b2",
         16, [x, drift_poly](int order, SequenceCache& cache) {
           auto r = detail::fresh("thm1_chain", order);
           PolyQuad arg = pq_embed(x.scale(Rational(12))) * pq_root();
           PolyQuad half_arg = pq_embed(x.scale(Rational(6))) * pq_root();
           auto c2 = build_lucas_balancing_even_gf(order);
           auto s1 = c2 * build_euler_gf(pq_scalar(Rational(0)), arg, order);
           auto s2 = egf_exp_linear(pq_embed(drift_poly), order) *
                     (egf_cosh_linear(half_arg, order) - egf_sinh_linear(half_arg, order));
           auto s3 = c2 - build_balancing_even_gf(order) * pq_root();
           auto s4 = series_lucas_balancing(cache, order, 0) -
                     series_balancing(cache, order, 0) * pq_root();
           detail::fold_mismatch(r, s1, s2, "product vs cosh-sinh form");
           detail::fold_mismatch(r, s2, s3, "cosh-sinh form vs c2 - sqrt(d) b2");
           detail::fold_mismatch(r, s3, s4, "closed forms vs sequence coefficients");
           return r;
         }});

    eqs.push_back({"thm2_product", "c2 * I(1/2, 12x sqrt(9x^2-1) z) = e^{(18x^2-1)z}", 16,
                   [x, drift_poly](int order, SequenceCache&) {
                     auto r = detail::fresh("thm2_product", order);
                     PolyQuad arg = pq_embed(x.scale(Rational(12))) * pq_root();
                     auto lhs = build_lucas_balancing_even_gf(order) *
                                build_euler_gf(pq_scalar(Rational(1, 2)), arg, order);
                     auto rhs = egf_exp_linear(pq_embed(drift_poly), order);
                     detail::fold_mismatch(r, lhs, rhs, "product vs exponential");
                     return r;
                   }});

    eqs.push_back({"thm3_reduction", "I(1/2, 2z) = e^z (1 - tanh z)", 16,
                   [](int order, SequenceCache&) {
                     auto r = detail::fresh("thm3_reduction", order);
                     auto one = pq_scalar(Rational(1));
                     auto lhs = build_euler_gf(pq_scalar(Rational(1, 2)), pq_scalar(Rational(2)),
                                               order);
                     auto tanh = egf_sinh_linear(one, order) * egf_cosh_linear(one, order).recip();
                     auto rhs = egf_exp_linear(one, order) * (egf_one(one, order) - tanh);
                     detail::fold_mismatch(r, lhs, rhs, "recip pipeline vs exp*(1-tanh)");
                     return r;
                   }});

    eqs.push_back(
        {"thm3_chain",
         "c2 * I(1/2, 12x sqrt(9x^2-1) z) = e^{6x sqrt(9x^2-1) z}(c2 - sqrt(9x^2-1) b2)", 16,
         [x](int order, SequenceCache&) {
           auto r = detail::fresh("thm3_chain", order);
           PolyQuad arg = pq_embed(x.scale(Rational(12))) * pq_root();
           PolyQuad half_arg = pq_embed(x.scale(Rational(6))) * pq_root();
           auto c2 = build_lucas_balancing_even_gf(order);
           auto lhs = c2 * build_euler_gf(pq_scalar(Rational(1, 2)), arg, order);
           auto rhs = egf_exp_linear(half_arg, order) *
                      (c2 - build_balancing_even_gf(order) * pq_root());
           detail::fold_mismatch(r, lhs, rhs, "product vs shifted difference");
           return r;
         }});

    eqs.push_back({"thm4_coshhalf", "cosh(z/2) I(x, z) = e^{(x - 1/2)z}", 16,
                   [x](int order, SequenceCache&) {
                     auto r = detail::fresh("thm4_coshhalf", order);
                     auto lhs = egf_cosh_linear(pq_scalar(Rational(1, 2)), order) *
                                build_euler_gf(pq_embed(x), pq_scalar(Rational(1)), order);
                     auto rhs = egf_exp_linear(pq_embed(x - Poly(Rational(1, 2))), order);
                     detail::fold_mismatch(r, lhs, rhs, "cosh-halved product vs exponential");
                     return r;
                   }});

    eqs.push_back(
        {"thm4_product",
         "c2 * I(x, 12x sqrt(9x^2-1) z) = e^{(18x^2 - 1 + 6x(2x-1) sqrt(9x^2-1))z}", 16,
         [x, drift_poly](int order, SequenceCache&) {
           auto r = detail::fresh("thm4_product", order);
           PolyQuad arg = pq_embed(x.scale(Rational(12))) * pq_root();
           auto lhs = build_lucas_balancing_even_gf(order) *
                      build_euler_gf(pq_embed(x), arg, order);
           Poly cross(std::vector<Rational>{Rational(0), Rational(-6), Rational(12)});
           PolyQuad expo = pq_embed(drift_poly) + pq_embed(cross) * pq_root();
           auto rhs = egf_exp_linear(expo, order);
           detail::fold_mismatch(r, lhs, rhs, "product vs mixed exponential");
           return r;
         }});

    eqs.push_back({"thm5_lucas_egf",
                   "sum L_{jn} z^n/n! = 2 e^{(F_j/2 + F_{j-1})z} cosh(sqrt5 F_j z / 2), j = 1..3",
                   16, [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("thm5_lucas_egf", order);
                     for (long long j = 1; j <= 3; ++j) {
                       auto closed = build_lucas_progression_gf(j, order, cache);
                       auto direct = series_lucas_progression(cache, j, order);
                       detail::fold_mismatch(r, closed, direct,
                                             "closed form vs recurrence, j=" + std::to_string(j));
                     }
                     return r;
                   }});

    eqs.push_back(
        {"thm5_product",
         "L(z) I(x, sqrt5 F_j z) = 2 e^{((sqrt5 x + beta) F_j + F_{j-1})z}, j = 1..3", 16,
         [x](int order, SequenceCache& cache) {
           auto r = detail::fresh("thm5_product", order);
           PolyQuad xp = pq5_embed(x);
           PolyQuad y5 = pq5_root();
           PolyQuad beta5(Poly(Rational(1, 2)), Poly(Rational(-1, 2)), Poly(Rational(5)));
           for (long long j = 1; j <= 3; ++j) {
             Rational fj(cache.fibonacci(j));
             Rational fj1(cache.fibonacci(j - 1));
             auto lucas_egf = (egf_exp_linear(pq5_scalar(fj * Rational(1, 2) + fj1), order) *
                               egf_cosh_linear(y5.scale(fj * Rational(1, 2)), order))
                                  .scale(Rational(2));
             PolyQuad arg = y5.scale(fj);
             auto lhs = lucas_egf * build_euler_gf(xp, arg, order);
             PolyQuad expo = (xp * y5 + beta5).scale(fj) + pq5_scalar(fj1);
             auto rhs = egf_exp_linear(expo, order).scale(Rational(2));
             detail::fold_mismatch(r, lhs, rhs, "product vs exponential, j=" + std::to_string(j));
           }
           return r;
         }});

    eqs.push_back({"def_b1", "closed form of sum B*_{2n+1}(x) z^n/n! matches the recurrence", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_b1", order);
                     detail::fold_mismatch(r, build_balancing_odd_gf(order),
                                           series_balancing(cache, order, 1), "b1");
                     return r;
                   }});
    eqs.push_back({"def_b2", "closed form of sum B*_{2n}(x) z^n/n! matches the recurrence", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_b2", order);
                     detail::fold_mismatch(r, build_balancing_even_gf(order),
                                           series_balancing(cache, order, 0), "b2");
                     return r;
                   }});
    eqs.push_back({"def_c1", "closed form of sum C_{2n+1}(x) z^n/n! matches the recurrence", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_c1", order);
                     detail::fold_mismatch(r, build_lucas_balancing_odd_gf(order),
                                           series_lucas_balancing(cache, order, 1), "c1");
                     return r;
                   }});
    eqs.push_back({"def_c2", "closed form of sum C_{2n}(x) z^n/n! matches the recurrence", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_c2", order);
                     detail::fold_mismatch(r, build_lucas_balancing_even_gf(order),
                                           series_lucas_balancing(cache, order, 0), "c2");
                     return r;
                   }});
    eqs.push_back({"def_H", "z e^{xz}/(e^z - 1) matches Bernoulli polynomials at sampled x", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_H", order);
                     for (Rational x0 : {Rational(0), Rational(1, 2), Rational(2, 3)}) {
                       auto closed = build_bernoulli_gf(x0, Rational(1), order);
                       auto direct = series_bernoulli_at(cache, x0, Rational(1), order);
                       detail::fold_mismatch(r, closed, direct, "x = " + x0.str());
                     }
                     return r;
                   }});
    eqs.push_back({"def_I", "2 e^{xz}/(e^z + 1) matches Euler polynomials at sampled x", 12,
                   [](int order, SequenceCache& cache) {
                     auto r = detail::fresh("def_I", order);
                     for (Rational x0 : {Rational(0), Rational(1, 2), Rational(2, 3)}) {
                       auto closed = build_euler_gf(x0, Rational(1), order);
                       auto direct = series_euler_at(cache, x0, Rational(1), order);
                       detail::fold_mismatch(r, closed, direct, "x = " + x0.str());
                     }
                     return r;
                   }});
    return eqs;
  }();
  return table;
}

inline GfCheckResult check_gf_equation(const std::string& id, int order, SequenceCache& cache) {
  for (const auto& eq : gf_equations())
    if (eq.id == id) return eq.run(order, cache);
  throw unknown_identity("generating-function equation " + id);
}

}  // namespace balid
