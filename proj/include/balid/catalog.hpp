#pragma once

#include <string>
#include <utility>
#include <vector>

#include "balid/gf.hpp"
#include "balid/identity.hpp"

namespace balid {

namespace detail {

inline Rational rbin(long long n, long long k) { return Rational(binomial(n, k)); }

inline QuadRat q5_scalar(const Rational& r) { return QuadRat(r, Rational(0), Rational(5)); }
inline QuadRat q5_zero() { return q5_scalar(Rational(0)); }

/// 5^{m/2} as an exact quad(5) element: integral for even m, an integer
/// multiple of sqrt5 for odd m.
inline QuadRat five_pow_half(long long m) {
  if (m % 2 == 0) return q5_scalar(Rational(5).pow(m / 2));
  return QuadRat(Rational(0), Rational(5).pow((m - 1) / 2), Rational(5));
}

inline Poly drift_poly() {  // 18x^2 - 1
  return Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)});
}

/// sum_k C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k}, the sum shared
/// by two of the symbolic identities.
inline Poly even_euler_convolution(long long n, SequenceCache& c) {
  Poly weight = Poly::monomial(2, Rational(36)) * balancing_disc();
  Poly acc;
  for (long long k = 0; 2 * k <= n; ++k) {
    Rational w = rbin(n, 2 * k) * Rational(c.euler_number(2 * k));
    acc = acc + (c.lucas_balancing_poly(2 * (n - 2 * k)) *
                 weight.pow(static_cast<unsigned long long>(k)))
                    .scale(w);
  }
  return acc;
}

inline unsigned long long u(long long v) { return static_cast<unsigned long long>(v); }

}  // namespace detail

/// The registry of all identities, stable order. Every entry evaluates
/// both sides exactly in its declared ring.
inline const std::vector<IdentitySpec>& builtin_catalog() {
  using detail::five_pow_half;
  using detail::q5_scalar;
  using detail::q5_zero;
  using detail::rbin;
  using detail::u;

  static const std::vector<IdentitySpec> catalog = [] {
    std::vector<IdentitySpec> ids;
    auto add = [&ids](const char* id, const char* anchor, const char* ring, ParamDomain dom,
                      std::function<Value(const Params&, SequenceCache&)> lhs,
                      std::function<Value(const Params&, SequenceCache&)> rhs) {
      ids.push_back(IdentitySpec{id, anchor, ring, dom, std::move(lhs), std::move(rhs)});
    };

    ParamDomain dom_n;
    ParamDomain dom_n1 = [] { ParamDomain d; d.n_min = 1; return d; }();
    ParamDomain dom_nj = [] { ParamDomain d; d.has_j = true; return d; }();
    ParamDomain dom_n1j = [] { ParamDomain d; d.n_min = 1; d.has_j = true; return d; }();
    ParamDomain dom_njsign = [] { ParamDomain d; d.has_j = true; d.has_sign = true; return d; }();
    ParamDomain dom_n1jq = [] {
      ParamDomain d;
      d.n_min = 1;
      d.has_j = true;
      d.has_q = true;
      return d;
    }();

    add("byrd", "sum C(n,2k)(5/4)^k L_{n-2k} E_{2k} = 2^{1-n}", "rational", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5, 4).pow(k) * Rational(c.lucas(p.n - 2 * k)) *
                   Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache&) -> Value { return Rational(2).pow(1 - p.n); });

    add("wang", "sum C(n,2k)(5/4)^k F_j^{2k} L_{j(n-2k)} E_{2k} = 2^{1-n} L_j^n", "rational",
        dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational fj(c.fibonacci(p.j));
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5, 4).pow(k) * fj.pow(2 * k) *
                   Rational(c.lucas(p.j * (p.n - 2 * k))) * Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return Rational(2).pow(1 - p.n) * Rational(c.lucas(p.j)).pow(p.n);
        });

    add("castellanos", "sum C(2n,2k) 2^{-2k-1} L_{2(n-k)j} L_j^{2k} E_{2k} = (5/4)^n F_j^{2n}",
        "rational", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational lj(c.lucas(p.j));
          for (long long k = 0; k <= p.n; ++k)
            acc += rbin(2 * p.n, 2 * k) * Rational(2).pow(-2 * k - 1) *
                   Rational(c.lucas(2 * (p.n - k) * p.j)) * lj.pow(2 * k) *
                   Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return Rational(5, 4).pow(p.n) * Rational(c.fibonacci(p.j)).pow(2 * p.n);
        });

    add("zhangma_beta", "sum C(n,k) 5^{(n-k)/2} F_k B_{n-k} = n beta^{n-1}", "quad(5)", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + five_pow_half(p.n - k).scale(rbin(p.n, k) * Rational(c.fibonacci(k)) *
                                                     c.bernoulli_number(p.n - k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return q5_zero();
          return c.golden_power(p.n - 1, -1).scale(Rational(p.n));
        });

    add("zhangma_lucas", "sum C(n,2k) 5^k F_{n-2k} B_{2k} = n L_{n-1} / 2", "rational", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5).pow(k) * Rational(c.fibonacci(p.n - 2 * k)) *
                   c.bernoulli_number(2 * k);
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return Rational(0);
          return Rational(p.n) * Rational(c.lucas(p.n - 1)) * Rational(1, 2);
        });

    add("frogoy1", "sum C(n,k)(sqrt5 F_j)^{n-k} F_{jk} B_{n-k} = n F_j beta^{j(n-1)}", "quad(5)",
        dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat acc = q5_zero();
          QuadRat base = sqrt5().scale(Rational(c.fibonacci(p.j)));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + base.pow(u(p.n - k)).scale(rbin(p.n, k) * Rational(c.fibonacci(p.j * k)) *
                                                   c.bernoulli_number(p.n - k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return q5_zero();
          return c.golden_power(p.j * (p.n - 1), -1)
              .scale(Rational(p.n) * Rational(c.fibonacci(p.j)));
        });

    add("frogoy2",
        "sum C(n,2k)(20^k - 5^k) F_{2j}^{2k} L_{2j(n-2k)} B_{2k} = (5n/2) F_{2j} F_{2j(n-1)}",
        "rational", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational f2j(c.fibonacci(2 * p.j));
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * (Rational(20).pow(k) - Rational(5).pow(k)) *
                   f2j.pow(2 * k) * Rational(c.lucas(2 * p.j * (p.n - 2 * k))) *
                   c.bernoulli_number(2 * k);
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return Rational(0);
          return Rational(5 * p.n) * Rational(1, 2) * Rational(c.fibonacci(2 * p.j)) *
                 Rational(c.fibonacci(2 * p.j * (p.n - 1)));
        });

    add("kelisky", "sum C(n,2k) 5^k F_j^{2k} F_{j(n-2k)} B_{2k} = (n/2) F_j L_{j(n-1)}",
        "rational", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational fj(c.fibonacci(p.j));
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5).pow(k) * fj.pow(2 * k) *
                   Rational(c.fibonacci(p.j * (p.n - 2 * k))) * c.bernoulli_number(2 * k);
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return Rational(0);
          return Rational(p.n) * Rational(1, 2) * Rational(c.fibonacci(p.j)) *
                 Rational(c.lucas(p.j * (p.n - 1)));
        });

    add("thm1",
        "sum C(n-1,2k-1) C_{2(n-2k)}(x) (144x^2(9x^2-1))^k E_{2k-1}(0) = 12x(1-9x^2) B*_{2n-2}(x)",
        "poly", dom_n1,
        [](const Params& p, SequenceCache& c) -> Value {
          Poly weight = Poly::monomial(2, Rational(144)) * balancing_disc();
          Poly acc;
          for (long long k = 1; 2 * k <= p.n; ++k) {
            Rational w = rbin(p.n - 1, 2 * k - 1) * c.euler_at_zero(2 * k - 1);
            acc = acc + (c.lucas_balancing_poly(2 * (p.n - 2 * k)) * weight.pow(u(k))).scale(w);
          }
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          Poly front = Poly::monomial(1, Rational(12)) *
                       Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(-9)});
          return front * c.balancing_poly(2 * p.n - 2);
        });

    add("cor2",
        "sum C(n-1,2k-1) 5^{k-1} F_{2j}^{2k-1} L_{2j(n-2k)} E_{2k-1}(0) = -F_{2j(n-1)}",
        "rational", dom_n1j,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational f2j(c.fibonacci(2 * p.j));
          for (long long k = 0; 2 * k <= p.n; ++k) {
            Integer b = binomial(p.n - 1, 2 * k - 1);
            if (b == 0) continue;  // the stated k=0 term vanishes by convention
            acc += Rational(b) * Rational(5).pow(k - 1) * f2j.pow(2 * k - 1) *
                   Rational(c.lucas(2 * p.j * (p.n - 2 * k))) * c.euler_at_zero(2 * k - 1);
          }
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return -Rational(c.fibonacci(2 * p.j * (p.n - 1)));
        });

    add("cor2_bernoulli",
        "sum C(n-1,2k-1) ((20^k - 5^k)/k) F_{2j}^{2k-1} L_{2j(n-2k)} B_{2k} = 5 F_{2j(n-1)}",
        "rational", dom_n1j,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational f2j(c.fibonacci(2 * p.j));
          // k starts at 1: the k=0 summand carries the factor 20^0 - 5^0 = 0.
          for (long long k = 1; 2 * k <= p.n; ++k)
            acc += rbin(p.n - 1, 2 * k - 1) *
                   ((Rational(20).pow(k) - Rational(5).pow(k)) / Rational(k)) *
                   f2j.pow(2 * k - 1) * Rational(c.lucas(2 * p.j * (p.n - 2 * k))) *
                   c.bernoulli_number(2 * k);
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return Rational(5) * Rational(c.fibonacci(2 * p.j * (p.n - 1)));
        });

    add("thm2", "sum C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k} = (18x^2-1)^n", "poly",
        dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          return detail::even_euler_convolution(p.n, c);
        },
        [](const Params& p, SequenceCache&) -> Value {
          return detail::drift_poly().pow(u(p.n));
        });

    add("cor5", "sum C(n,2k)(5/4)^k F_{2j}^{2k} L_{2j(n-2k)} E_{2k} = 2^{1-n} L_{2j}^n",
        "rational", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          Rational f2j(c.fibonacci(2 * p.j));
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5, 4).pow(k) * f2j.pow(2 * k) *
                   Rational(c.lucas(2 * p.j * (p.n - 2 * k))) * Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return Rational(2).pow(1 - p.n) * Rational(c.lucas(2 * p.j)).pow(p.n);
        });

    add("cor5_j1", "sum C(n,2k)(5/4)^k L_{2(n-2k)} E_{2k} = 2 (3/2)^n", "rational", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(5, 4).pow(k) *
                   Rational(c.lucas(2 * (p.n - 2 * k))) * Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache&) -> Value {
          return Rational(2) * Rational(3, 2).pow(p.n);
        });

    add("cor5_j2", "sum C(n,2k)(45/4)^k L_{4(n-2k)} E_{2k} = 2 (7/2)^n", "rational", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          Rational acc;
          for (long long k = 0; 2 * k <= p.n; ++k)
            acc += rbin(p.n, 2 * k) * Rational(45, 4).pow(k) *
                   Rational(c.lucas(4 * (p.n - 2 * k))) * Rational(c.euler_number(2 * k));
          return acc;
        },
        [](const Params& p, SequenceCache&) -> Value {
          return Rational(2) * Rational(7, 2).pow(p.n);
        });

    add("thm3",
        "sum C(n,2k) C_{2(n-2k)}(x) (36x^2(9x^2-1))^k E_{2k} = "
        "sum C(n,k)(C_{2k}(x) - sqrt(9x^2-1) B*_{2k}(x))(6x sqrt(9x^2-1))^{n-k}",
        "polyquad(9x^2-1)", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          return pq_embed(detail::even_euler_convolution(p.n, c));
        },
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = pq_embed(Poly::monomial(1, Rational(6))) * pq_root();
          PolyQuad acc = pq_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k) {
            PolyQuad diff = pq_embed(c.lucas_balancing_poly(2 * k)) -
                            pq_embed(c.balancing_poly(2 * k)) * pq_root();
            acc = acc + (diff * base.pow(u(p.n - k))).scale(rbin(p.n, k));
          }
          return acc;
        });

    add("thm4",
        "sum C(n,k) C_{2(n-k)}(x) (12x sqrt(9x^2-1))^k E_k(x) = "
        "(18x^2 - 1 + 6x(2x-1) sqrt(9x^2-1))^n",
        "polyquad(9x^2-1)", dom_n,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = pq_embed(Poly::monomial(1, Rational(12))) * pq_root();
          PolyQuad acc = pq_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (pq_embed(c.lucas_balancing_poly(2 * (p.n - k))) * base.pow(u(k)) *
                         pq_embed(c.euler_poly(k)))
                            .scale(rbin(p.n, k));
          return acc;
        },
        [](const Params& p, SequenceCache&) -> Value {
          Poly cross(std::vector<Rational>{Rational(0), Rational(-6), Rational(12)});
          PolyQuad base = pq_embed(detail::drift_poly()) + pq_embed(cross) * pq_root();
          return base.pow(u(p.n));
        });

    // Shared pieces of the sqrt5-symbolic family below.
    auto pq5_beta = [] {
      return PolyQuad(Poly(Rational(1, 2)), Poly(Rational(-1, 2)), Poly(Rational(5)));
    };
    auto pq5_alpha = [] {
      return PolyQuad(Poly(Rational(1, 2)), Poly(Rational(1, 2)), Poly(Rational(5)));
    };
    // (sqrt5 x + beta) F_j + F_{j-1} and (alpha - sqrt5 x) F_j + F_{j-1}.
    auto binet_base = [pq5_alpha, pq5_beta](int sign, long long j, SequenceCache& c) {
      PolyQuad xroot = pq5_embed(poly_x()) * pq5_root();
      PolyQuad inner = sign >= 0 ? xroot + pq5_beta() : pq5_alpha() - xroot;
      return inner.scale(Rational(c.fibonacci(j))) + pq5_scalar(Rational(c.fibonacci(j - 1)));
    };

    add("fbpol_plus",
        "sum C(n,k) F_{jk} (sqrt5 F_j)^{n-k} B_{n-k}(x) = n F_j ((sqrt5 x + beta)F_j + F_{j-1})^{n-1}",
        "polyquad(5)", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = pq5_root().scale(Rational(c.fibonacci(p.j)));
          PolyQuad acc = pq5_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * pq5_embed(c.bernoulli_poly(p.n - k)))
                            .scale(rbin(p.n, k) * Rational(c.fibonacci(p.j * k)));
          return acc;
        },
        [binet_base](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return pq5_scalar(Rational(0));
          return binet_base(+1, p.j, c)
              .pow(u(p.n - 1))
              .scale(Rational(p.n) * Rational(c.fibonacci(p.j)));
        });

    add("fbpol_minus",
        "sum C(n,k) F_{jk} (-sqrt5 F_j)^{n-k} B_{n-k}(x) = n F_j ((alpha - sqrt5 x)F_j + F_{j-1})^{n-1}",
        "polyquad(5)", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = -pq5_root().scale(Rational(c.fibonacci(p.j)));
          PolyQuad acc = pq5_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * pq5_embed(c.bernoulli_poly(p.n - k)))
                            .scale(rbin(p.n, k) * Rational(c.fibonacci(p.j * k)));
          return acc;
        },
        [binet_base](const Params& p, SequenceCache& c) -> Value {
          if (p.n == 0) return pq5_scalar(Rational(0));
          return binet_base(-1, p.j, c)
              .pow(u(p.n - 1))
              .scale(Rational(p.n) * Rational(c.fibonacci(p.j)));
        });

    add("thm5_plus",
        "sum C(n,k) L_{jk} (sqrt5 F_j)^{n-k} E_{n-k}(x) = 2((sqrt5 x + beta)F_j + F_{j-1})^n",
        "polyquad(5)", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = pq5_root().scale(Rational(c.fibonacci(p.j)));
          PolyQuad acc = pq5_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * pq5_embed(c.euler_poly(p.n - k)))
                            .scale(rbin(p.n, k) * Rational(c.lucas(p.j * k)));
          return acc;
        },
        [binet_base](const Params& p, SequenceCache& c) -> Value {
          return binet_base(+1, p.j, c).pow(u(p.n)).scale(Rational(2));
        });

    add("thm5_minus",
        "sum C(n,k) L_{jk} (-sqrt5 F_j)^{n-k} E_{n-k}(x) = 2((alpha - sqrt5 x)F_j + F_{j-1})^n",
        "polyquad(5)", dom_nj,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = -pq5_root().scale(Rational(c.fibonacci(p.j)));
          PolyQuad acc = pq5_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * pq5_embed(c.euler_poly(p.n - k)))
                            .scale(rbin(p.n, k) * Rational(c.lucas(p.j * k)));
          return acc;
        },
        [binet_base](const Params& p, SequenceCache& c) -> Value {
          return binet_base(-1, p.j, c).pow(u(p.n)).scale(Rational(2));
        });

    add("main53",
        "sum C(n,k) L_{jk} (+-sqrt5 F_j)^{n-k} E_{n-k}(x) = 2^{1-n}(L_j +- sqrt5 F_j(2x-1))^n",
        "polyquad(5)", dom_njsign,
        [](const Params& p, SequenceCache& c) -> Value {
          PolyQuad base = pq5_root().scale(Rational(p.sign) * Rational(c.fibonacci(p.j)));
          PolyQuad acc = pq5_scalar(Rational(0));
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * pq5_embed(c.euler_poly(p.n - k)))
                            .scale(rbin(p.n, k) * Rational(c.lucas(p.j * k)));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          Poly two_x_m1(std::vector<Rational>{Rational(-1), Rational(2)});
          PolyQuad inner =
              pq5_scalar(Rational(c.lucas(p.j))) +
              (pq5_root() * pq5_embed(two_x_m1.scale(Rational(c.fibonacci(p.j)))))
                  .scale(Rational(p.sign));
          return inner.pow(u(p.n)).scale(Rational(2).pow(1 - p.n));
        });

    add("main53_half", "sum C(n,k)(+-sqrt5 F_j)^{n-k} 2^k L_{jk} E_{n-k} = 2 L_j^n", "quad(5)",
        dom_njsign,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat base = sqrt5().scale(Rational(p.sign) * Rational(c.fibonacci(p.j)));
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + base.pow(u(p.n - k))
                            .scale(rbin(p.n, k) * Rational(2).pow(k) *
                                   Rational(c.lucas(p.j * k)) *
                                   Rational(c.euler_number(p.n - k)));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return q5_scalar(Rational(2) * Rational(c.lucas(p.j)).pow(p.n));
        });

    add("curious_alpha",
        "sum C(n,k)(+-sqrt5 F_j)^{n-k} L_{jk} E_{n-k}(alpha) = 2(+-1)^n L_{j+-1}^n", "quad(5)",
        dom_njsign,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat base = sqrt5().scale(Rational(p.sign) * Rational(c.fibonacci(p.j)));
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * c.euler_poly(p.n - k).eval(golden_alpha()))
                            .scale(rbin(p.n, k) * Rational(c.lucas(p.j * k)));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          Rational parity = p.sign >= 0 ? Rational(1) : Rational(-1).pow(p.n);
          long long idx = p.sign >= 0 ? p.j + 1 : p.j - 1;
          return q5_scalar(Rational(2) * parity * Rational(c.lucas(idx)).pow(p.n));
        });

    add("curious_beta",
        "sum C(n,k)(+-sqrt5 F_j)^{n-k} L_{jk} E_{n-k}(beta) = 2(-+1)^n L_{j-+1}^n", "quad(5)",
        dom_njsign,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat base = sqrt5().scale(Rational(p.sign) * Rational(c.fibonacci(p.j)));
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + (base.pow(u(p.n - k)) * c.euler_poly(p.n - k).eval(golden_beta()))
                            .scale(rbin(p.n, k) * Rational(c.lucas(p.j * k)));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          Rational parity = p.sign >= 0 ? Rational(-1).pow(p.n) : Rational(1);
          long long idx = p.sign >= 0 ? p.j - 1 : p.j + 1;
          return q5_scalar(Rational(2) * parity * Rational(c.lucas(idx)).pow(p.n));
        });

    add("cor7",
        "sum C(n,k)(sqrt5 F_j)^{n-k}(q^{-(n-k)} - 1) L_{jk} E_{n-k}(0) = "
        "2 q^{-n} sum_{r=1}^{q-1} (-1)^r (r alpha^j + (q-r) beta^j)^n",
        "quad(5)", dom_n1jq,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat base = sqrt5().scale(Rational(c.fibonacci(p.j)));
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + base.pow(u(p.n - k))
                            .scale(rbin(p.n, k) *
                                   (Rational(p.q).pow(-(p.n - k)) - Rational(1)) *
                                   Rational(c.lucas(p.j * k)) * c.euler_at_zero(p.n - k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat acc = q5_zero();
          QuadRat aj = c.golden_power(p.j, +1);
          QuadRat bj = c.golden_power(p.j, -1);
          for (long long r = 1; r <= p.q - 1; ++r) {
            QuadRat term =
                (aj.scale(Rational(r)) + bj.scale(Rational(p.q - r))).pow(u(p.n));
            acc = r % 2 == 0 ? acc + term : acc - term;
          }
          return acc.scale(Rational(2) * Rational(p.q).pow(-p.n));
        });

    add("cor7_q3",
        "sum C(n,k) L_k (sqrt5)^{n-k}(3^{-(n-k)} - 1) E_{n-k}(0) = 2 * 3^{-n} sqrt5 F_{2n}",
        "quad(5)", dom_n1,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + sqrt5()
                            .pow(u(p.n - k))
                            .scale(rbin(p.n, k) *
                                   (Rational(3).pow(-(p.n - k)) - Rational(1)) *
                                   Rational(c.lucas(k)) * c.euler_at_zero(p.n - k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return sqrt5().scale(Rational(2) * Rational(3).pow(-p.n) *
                               Rational(c.fibonacci(2 * p.n)));
        });

    add("cor7_q5",
        "sum C(n,k) L_k (sqrt5)^{n-k}(5^{-(n-k)} - 1) E_{n-k}(0) = "
        "2 * 5^{(1-n)/2}(F_{2n} - F_n) for even n, 2 * 5^{-n/2}(L_{2n} - L_n) for odd n",
        "quad(5)", dom_n1,
        [](const Params& p, SequenceCache& c) -> Value {
          QuadRat acc = q5_zero();
          for (long long k = 0; k <= p.n; ++k)
            acc = acc + sqrt5()
                            .pow(u(p.n - k))
                            .scale(rbin(p.n, k) *
                                   (Rational(5).pow(-(p.n - k)) - Rational(1)) *
                                   Rational(c.lucas(k)) * c.euler_at_zero(p.n - k));
          return acc;
        },
        [](const Params& p, SequenceCache& c) -> Value {
          // Both branches are integer multiples of sqrt5 over a power of 5.
          if (p.n % 2 == 0) {
            Rational coeff = Rational(2) * Rational(5).pow(-p.n / 2) *
                             (Rational(c.fibonacci(2 * p.n)) - Rational(c.fibonacci(p.n)));
            return sqrt5().scale(coeff);
          }
          Rational coeff = Rational(2) * Rational(5).pow(-(p.n + 1) / 2) *
                           (Rational(c.lucas(2 * p.n)) - Rational(c.lucas(p.n)));
          return sqrt5().scale(coeff);
        });

    ParamDomain dom_mult = [] {
      ParamDomain d;
      d.has_q = true;
      d.n_cap = 12;
      return d;
    }();
    add("euler_mult", "q^n sum_{r=0}^{q-1} (-1)^r E_n(x + r/q) = E_n(qx)", "poly", dom_mult,
        [](const Params& p, SequenceCache& c) -> Value {
          Poly acc;
          const Poly& en = c.euler_poly(p.n);
          for (long long r = 0; r <= p.q - 1; ++r) {
            Poly shifted = en.compose_affine(Rational(r, p.q), Rational(1));
            acc = r % 2 == 0 ? acc + shifted : acc - shifted;
          }
          return acc.scale(Rational(p.q).pow(p.n));
        },
        [](const Params& p, SequenceCache& c) -> Value {
          return c.euler_poly(p.n).compose_affine(Rational(0), Rational(p.q));
        });

    ParamDomain dom_link = [] {
      ParamDomain d;
      d.has_s = true;
      d.has_fam = true;
      return d;
    }();
    add("link1",
        "B*_n(w_s L_s/6) = w_s^{n-1} F_{sn}/F_s and C_n(w_s L_s/6) = w_s^n L_{sn}/2, "
        "w_s = 1 for even s and i for odd s",
        "quad(-1) for odd s, rational for even s", dom_link,
        [](const Params& p, SequenceCache& c) -> Value {
          const Poly& poly =
              p.fam == 0 ? c.balancing_poly(p.n) : c.lucas_balancing_poly(p.n);
          Rational ls6 = Rational(c.lucas(p.s)) * Rational(1, 6);
          if (p.s % 2 == 0) return poly.eval(ls6);
          QuadRat pt(Rational(0), ls6, Rational(-1));
          return poly.eval(pt);
        },
        [](const Params& p, SequenceCache& c) -> Value {
          if (p.fam == 0) {
            Rational mag = Rational(c.fibonacci(p.s * p.n)) / Rational(c.fibonacci(p.s));
            if (p.s % 2 == 0) return mag;
            QuadRat w = imaginary_unit();
            QuadRat wpow = p.n >= 1 ? w.pow(u(p.n - 1)) : w.inv();
            return wpow.scale(mag);
          }
          Rational mag = Rational(c.lucas(p.s * p.n)) * Rational(1, 2);
          if (p.s % 2 == 0) return mag;
          return imaginary_unit().pow(u(p.n)).scale(mag);
        });

    return ids;
  }();
  return catalog;
}

inline const IdentitySpec& find_identity(const std::string& id) {
  for (const auto& spec : builtin_catalog())
    if (spec.id == id) return spec;
  throw unknown_identity(id);
}

}  // namespace balid
