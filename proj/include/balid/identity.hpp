#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "balid/error.hpp"
#include "balid/poly.hpp"
#include "balid/quadext.hpp"
#include "balid/rational.hpp"
#include "balid/sequences.hpp"

namespace balid {

/// One element of whichever ring an identity is declared over.
using Value = std::variant<Rational, QuadRat, Poly, PolyQuad>;

inline std::string value_str(const Value& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

inline bool value_eq(const Value& a, const Value& b) {
  if (a.index() != b.index())
    throw domain_violation("identity sides evaluated in different rings");
  return std::visit(
      [&b](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

/// Parameter tuple. Which fields are meaningful is declared per identity.
struct Params {
  long long n = 0;
  long long j = 1;
  long long q = 3;
  long long s = 1;
  int sign = +1;
  int fam = 0;  // equation selector for identities stating a pair
};

struct ParamDomain {
  bool has_n = true;
  bool has_j = false;
  bool has_q = false;
  bool has_s = false;
  bool has_sign = false;
  bool has_fam = false;
  long long n_min = 0;
  std::optional<long long> n_cap;  // identities stated only up to a fixed n

  std::string describe() const {
    std::string out;
    auto add = [&out](const std::string& s) {
      if (!out.empty()) out += ", ";
      out += s;
    };
    if (has_n) {
      add("n >= " + std::to_string(n_min));
      if (n_cap) add("n <= " + std::to_string(*n_cap));
    }
    if (has_j) add("j >= 1");
    if (has_q) add("q odd >= 3");
    if (has_s) add("s >= 1");
    if (has_sign) add("sign in {+,-}");
    if (has_fam) add("both stated equations");
    return out;
  }
};

inline std::string param_str(const Params& p, const ParamDomain& d) {
  std::string out;
  auto add = [&out](const std::string& s) {
    if (!out.empty()) out += " ";
    out += s;
  };
  if (d.has_n) add("n=" + std::to_string(p.n));
  if (d.has_j) add("j=" + std::to_string(p.j));
  if (d.has_q) add("q=" + std::to_string(p.q));
  if (d.has_s) add("s=" + std::to_string(p.s));
  if (d.has_sign) add(std::string("sign=") + (p.sign >= 0 ? "+" : "-"));
  if (d.has_fam) add("eq=" + std::to_string(p.fam + 1));
  return out;
}

/// A named identity: both sides evaluable exactly in a declared ring.
struct IdentitySpec {
  std::string id;
  std::string anchor;  // compact statement of what is being checked
  std::string ring;
  ParamDomain domain;
  std::function<Value(const Params&, SequenceCache&)> lhs;
  std::function<Value(const Params&, SequenceCache&)> rhs;
};

struct GridSpec {
  long long n_max = 20;
  long long j_max = 6;
  long long s_max = 6;
  std::vector<long long> q_set = {3, 5, 7};
};

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string id;
  std::string grid;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  long long millis = 0;
};

inline void validate_params(const IdentitySpec& spec, const Params& p) {
  const ParamDomain& d = spec.domain;
  if (d.has_n) {
    if (p.n < d.n_min)
      throw domain_violation(spec.id + ": n must be >= " + std::to_string(d.n_min));
    if (d.n_cap && p.n > *d.n_cap)
      throw domain_violation(spec.id + ": n must be <= " + std::to_string(*d.n_cap));
  }
  if (d.has_j && p.j < 1) throw domain_violation(spec.id + ": j must be >= 1");
  if (d.has_q && (p.q < 3 || p.q % 2 == 0))
    throw domain_violation(spec.id + ": q must be odd and >= 3");
  if (d.has_s && p.s < 1) throw domain_violation(spec.id + ": s must be >= 1");
  if (d.has_sign && p.sign != 1 && p.sign != -1)
    throw domain_violation(spec.id + ": sign must be +1 or -1");
  if (d.has_fam && (p.fam < 0 || p.fam > 1))
    throw domain_violation(spec.id + ": equation selector out of range");
}

inline std::pair<Value, Value> evaluate_identity(const IdentitySpec& spec, const Params& p,
                                                 SequenceCache& cache) {
  validate_params(spec, p);
  return {spec.lhs(p, cache), spec.rhs(p, cache)};
}

/// Expand the grid into the identity's parameter tuples, lexicographic in
/// (n, j, q, s, sign, fam).
inline std::vector<Params> enumerate_grid(const ParamDomain& d, const GridSpec& grid) {
  std::vector<Params> tuples;
  long long n_hi = d.has_n ? grid.n_max : 0;
  if (d.n_cap && *d.n_cap < n_hi) n_hi = *d.n_cap;
  for (long long n = d.has_n ? d.n_min : 0; n <= (d.has_n ? n_hi : 0); ++n)
    for (long long j = 1; j <= (d.has_j ? grid.j_max : 1); ++j)
      for (std::size_t qi = 0; qi < (d.has_q ? grid.q_set.size() : 1); ++qi)
        for (long long s = 1; s <= (d.has_s ? grid.s_max : 1); ++s)
          for (int sg = 0; sg < (d.has_sign ? 2 : 1); ++sg)
            for (int fam = 0; fam < (d.has_fam ? 2 : 1); ++fam) {
              Params p;
              p.n = n;
              p.j = j;
              p.q = d.has_q ? grid.q_set[qi] : 3;
              p.s = s;
              p.sign = sg == 0 ? +1 : -1;
              p.fam = fam;
              tuples.push_back(p);
            }
  return tuples;
}

inline std::string grid_str(const ParamDomain& d, const GridSpec& grid) {
  std::string out;
  auto add = [&out](const std::string& s) {
    if (!out.empty()) out += ", ";
    out += s;
  };
  if (d.has_n) {
    long long hi = grid.n_max;
    if (d.n_cap && *d.n_cap < hi) hi = *d.n_cap;
    add("n=" + std::to_string(d.n_min) + ".." + std::to_string(hi));
  }
  if (d.has_j) add("j=1.." + std::to_string(grid.j_max));
  if (d.has_q) {
    std::string qs;
    for (auto q : grid.q_set) qs += (qs.empty() ? "" : ",") + std::to_string(q);
    add("q in {" + qs + "}");
  }
  if (d.has_s) add("s=1.." + std::to_string(grid.s_max));
  if (d.has_sign) add("sign in {+,-}");
  if (d.has_fam) add("both equations");
  return out;
}

/// Evaluate every tuple of the grid; pass iff lhs = rhs everywhere. The
/// first failure is captured as a counterexample.
inline CheckResult check_identity(const IdentitySpec& spec, const GridSpec& grid,
                                  SequenceCache& cache) {
  auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.id = spec.id;
  result.grid = grid_str(spec.domain, grid);
  result.pass = true;
  for (const Params& p : enumerate_grid(spec.domain, grid)) {
    Value lhs = spec.lhs(p, cache);
    Value rhs = spec.rhs(p, cache);
    if (!value_eq(lhs, rhs)) {
      result.pass = false;
      result.counterexample =
          Counterexample{param_str(p, spec.domain), value_str(lhs), value_str(rhs)};
      break;
    }
  }
  auto stop = std::chrono::steady_clock::now();
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return result;
}

}  // namespace balid
