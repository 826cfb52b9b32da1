#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "balid/identity.hpp"
#include "balid/sequences.hpp"

namespace balid {

/// One parsed OEIS b-file: "index value" pairs, indices ascending by 1.
struct BFile {
  std::string id;
  long long first_index = 0;
  std::vector<Integer> values;  // values[k] belongs to index first_index + k
};

namespace detail {

inline bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

}  // namespace detail

/// Lines are "<index> <value>"; blank lines and '#' comments are skipped.
inline BFile parse_bfile(std::istream& in, const std::string& id = "") {
  BFile out;
  out.id = id;
  std::string line;
  long long line_no = 0;
  bool have_first = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string idx_tok, val_tok, extra;
    if (!(ls >> idx_tok)) continue;  // blank
    if (idx_tok[0] == '#') continue;
    if (!(ls >> val_tok)) throw parse_error("missing value column", line_no);
    if (ls >> extra) throw parse_error("trailing data after value", line_no);
    if (!detail::is_integer_token(idx_tok) || !detail::is_integer_token(val_tok))
      throw parse_error("malformed integer", line_no);
    long long index = std::stoll(idx_tok);
    if (!have_first) {
      out.first_index = index;
      have_first = true;
    } else if (index != out.first_index + static_cast<long long>(out.values.size())) {
      throw parse_error("non-consecutive index " + idx_tok, line_no);
    }
    out.values.emplace_back(Integer(val_tok));
  }
  return out;
}

inline BFile parse_bfile(const std::string& text, const std::string& id = "") {
  std::istringstream in(text);
  return parse_bfile(in, id);
}

enum class OeisFamily { fibonacci, lucas, balancing, lucas_balancing };

inline const char* oeis_family_name(OeisFamily f) {
  switch (f) {
    case OeisFamily::fibonacci: return "fibonacci";
    case OeisFamily::lucas: return "lucas";
    case OeisFamily::balancing: return "balancing";
    case OeisFamily::lucas_balancing: return "lucas_balancing";
  }
  return "?";
}

inline OeisFamily parse_oeis_family(const std::string& s) {
  if (s == "fibonacci") return OeisFamily::fibonacci;
  if (s == "lucas") return OeisFamily::lucas;
  if (s == "balancing") return OeisFamily::balancing;
  if (s == "lucas_balancing" || s == "lucas-balancing") return OeisFamily::lucas_balancing;
  throw unknown_identity("sequence family " + s);
}

/// n-th member of the family; the polynomial families are evaluated at
/// x = 1, where they reduce to the balancing numbers.
inline Integer oeis_family_value(SequenceCache& cache, OeisFamily f, long long n) {
  switch (f) {
    case OeisFamily::fibonacci: return cache.fibonacci(n);
    case OeisFamily::lucas: return cache.lucas(n);
    case OeisFamily::balancing: return cache.balancing_poly(n).eval(Rational(1)).num();
    case OeisFamily::lucas_balancing:
      return cache.lucas_balancing_poly(n).eval(Rational(1)).num();
  }
  throw unknown_identity("sequence family");
}

/// Compare computed values against every entry of a b-file. Both index
/// conventions are tried before failing: the file index as the sequence
/// index, then the 0-based position within the file.
inline CheckResult oeis_check(OeisFamily family, const BFile& bfile, SequenceCache& cache) {
  auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.id = std::string("oeis:") + oeis_family_name(family) +
              (bfile.id.empty() ? "" : " vs " + bfile.id);
  result.grid = std::to_string(bfile.values.size()) + " entries from index " +
                std::to_string(bfile.first_index);

  auto try_offset = [&](long long base) -> std::optional<Counterexample> {
    for (std::size_t k = 0; k < bfile.values.size(); ++k) {
      long long n = base + static_cast<long long>(k);
      if (n < 0)
        return Counterexample{"index " + std::to_string(n), "(negative index)",
                              bfile.values[k].str()};
      Integer got = oeis_family_value(cache, family, n);
      if (got != bfile.values[k])
        return Counterexample{"n=" + std::to_string(n), got.str(), bfile.values[k].str()};
    }
    return std::nullopt;
  };

  auto direct = try_offset(bfile.first_index);
  result.pass = !direct.has_value();
  if (!result.pass) {
    auto rebased = try_offset(0);
    if (!rebased.has_value()) {
      result.pass = true;  // file is 1-based for a 0-indexed family
    } else {
      result.counterexample = *direct;
      result.counterexample->params += " (also fails 0-based: " + rebased->params + ")";
    }
  }
  auto stop = std::chrono::steady_clock::now();
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return result;
}

}  // namespace balid
