// Command-line front end: verify identity grids, print sequence tables,
// run generating-function checks, and cross-check sequences against OEIS
// b-files. Exit status: 0 all pass, 1 verification failure, 2 usage or
// parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balid/balid.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("BALID_DATA_DIR")) return env;
#ifdef BALID_DEFAULT_DATA_DIR
  return BALID_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

struct VerifyOptions {
  std::string ids = "all";
  balid::GridSpec grid;
  std::string q_csv = "3,5,7";
  std::string format = "text";
  std::string out_path;
};

int cmd_verify(const VerifyOptions& opt) {
  balid::GridSpec grid = opt.grid;
  grid.q_set.clear();
  for (const auto& q : split_csv(opt.q_csv)) grid.q_set.push_back(std::stoll(q));
  balid::SequenceCache cache;
  balid::Report report =
      balid::run_verify(split_csv(opt.ids), grid, cache, opt.format, opt.out_path);
  if (opt.out_path.empty())
    std::cout << balid::render_report(report, opt.format);
  else
    std::cout << "report written to " << opt.out_path << " (" << report.pass_count << " pass, "
              << report.fail_count << " fail)\n";
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int cmd_list(const std::string& format) {
  if (format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& spec : balid::builtin_catalog())
      items.push_back({{"id", spec.id},
                       {"anchor", spec.anchor},
                       {"ring", spec.ring},
                       {"domain", spec.domain.describe()}});
    std::cout << items.dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& spec : balid::builtin_catalog()) {
    std::cout << spec.id << "\n    " << spec.anchor << "\n    ring: " << spec.ring
              << "; domain: " << spec.domain.describe() << "\n";
  }
  return kExitPass;
}

int cmd_table(const std::string& family, long long n_max) {
  balid::SequenceCache cache;
  for (long long n = 0; n <= n_max; ++n) {
    std::string value;
    if (family == "fibonacci") value = cache.fibonacci(n).str();
    else if (family == "lucas") value = cache.lucas(n).str();
    else if (family == "balancing") value = cache.balancing_poly(n).eval(balid::Rational(1)).str();
    else if (family == "lucas-balancing")
      value = cache.lucas_balancing_poly(n).eval(balid::Rational(1)).str();
    else if (family == "balancing-poly") value = cache.balancing_poly(n).str();
    else if (family == "lucas-balancing-poly") value = cache.lucas_balancing_poly(n).str();
    else if (family == "bernoulli") value = cache.bernoulli_number(n).str();
    else if (family == "euler") value = cache.euler_number(n).str();
    else if (family == "bernoulli-poly") value = cache.bernoulli_poly(n).str();
    else if (family == "euler-poly") value = cache.euler_poly(n).str();
    else throw balid::unknown_identity("table family " + family);
    std::cout << n << "\t" << value << "\n";
  }
  return kExitPass;
}

int cmd_gf_check(const std::string& ids_csv, int order) {
  balid::SequenceCache cache;
  std::vector<std::string> ids = split_csv(ids_csv);
  bool all = ids.empty() || (ids.size() == 1 && ids[0] == "all");

  std::vector<const balid::GfEquation*> selection;
  for (const auto& eq : balid::gf_equations())
    if (all || std::find(ids.begin(), ids.end(), eq.id) != ids.end()) selection.push_back(&eq);
  if (!all && selection.size() != ids.size()) {
    for (const auto& id : ids) {
      bool known = false;
      for (const auto& eq : balid::gf_equations()) known = known || eq.id == id;
      if (!known) throw balid::unknown_identity("generating-function equation " + id);
    }
  }

  bool ok = true;
  for (const auto* eq : selection) {
    int run_order = order > 0 ? order : eq->default_order;
    auto result = eq->run(run_order, cache);
    ok = ok && result.pass;
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.id << " (order " << run_order
              << ")";
    if (!result.pass)
      std::cout << " first failing order " << result.first_fail_order << ": " << result.detail;
    std::cout << "\n";
  }
  return ok ? kExitPass : kExitCheckFailed;
}

struct OeisTarget {
  balid::OeisFamily family;
  const char* fixture;
};

int cmd_oeis_check(const std::string& family, const std::string& bfile_path,
                   const std::string& data_dir) {
  const OeisTarget targets[] = {
      {balid::OeisFamily::fibonacci, "b000045.txt"},
      {balid::OeisFamily::lucas, "b000032.txt"},
      {balid::OeisFamily::balancing, "b001109.txt"},
      {balid::OeisFamily::lucas_balancing, "b001541.txt"},
  };
  balid::SequenceCache cache;
  bool ok = true;
  for (const auto& target : targets) {
    if (family != "all" && balid::parse_oeis_family(family) != target.family) continue;
    std::string path = bfile_path;
    if (path.empty() || family == "all") path = data_dir + "/" + target.fixture;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file " + path);
    balid::BFile bfile = balid::parse_bfile(in, path);
    auto result = balid::oeis_check(target.family, bfile, cache);
    ok = ok && result.pass;
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.id << " (" << result.grid
              << ")\n";
    if (result.counterexample)
      std::cout << "       first mismatch: " << result.counterexample->params
                << " computed=" << result.counterexample->lhs
                << " file=" << result.counterexample->rhs << "\n";
  }
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of balancing-polynomial and Lucas-Euler identities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check identities on a parameter grid");
  verify->add_option("--ids", vopt.ids, "comma-separated identity ids, or 'all'");
  verify->add_option("--n-max", vopt.grid.n_max, "grid bound for n")->check(CLI::NonNegativeNumber);
  verify->add_option("--j-max", vopt.grid.j_max, "grid bound for j")->check(CLI::PositiveNumber);
  verify->add_option("--s-max", vopt.grid.s_max, "grid bound for s")->check(CLI::PositiveNumber);
  verify->add_option("--q-set", vopt.q_csv, "comma-separated odd moduli");
  verify->add_option("--format", vopt.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", vopt.out_path, "write the report to this path");

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "list the identity catalog");
  list->add_option("--format", list_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string table_family = "fibonacci";
  long long table_n_max = 10;
  auto* table = app.add_subcommand("table", "print a sequence or polynomial family");
  table->add_option("--family", table_family,
                    "fibonacci|lucas|balancing|lucas-balancing|balancing-poly|"
                    "lucas-balancing-poly|bernoulli|euler|bernoulli-poly|euler-poly");
  table->add_option("--n-max", table_n_max, "largest index")->check(CLI::NonNegativeNumber);

  std::string gf_ids = "all";
  int gf_order = 0;
  auto* gf = app.add_subcommand("gf-check", "verify generating-function equations");
  gf->add_option("--ids", gf_ids, "comma-separated equation ids, or 'all'");
  gf->add_option("--order", gf_order, "truncation order (default: per equation)")
      ->check(CLI::PositiveNumber);

  std::string oeis_family = "all";
  std::string oeis_bfile;
  std::string data_dir = default_data_dir();
  auto* oeis = app.add_subcommand("oeis-check", "cross-check sequences against OEIS b-files");
  oeis->add_option("--family", oeis_family, "all|fibonacci|lucas|balancing|lucas_balancing");
  oeis->add_option("--bfile", oeis_bfile, "user-supplied b-file (single family only)");
  oeis->add_option("--data-dir", data_dir, "directory holding the bundled fixtures");

  try {
    app.parse(argc, argv);
    if (*verify) return cmd_verify(vopt);
    if (*list) return cmd_list(list_format);
    if (*table) return cmd_table(table_family, table_n_max);
    if (*gf) return cmd_gf_check(gf_ids, gf_order);
    if (*oeis) return cmd_oeis_check(oeis_family, oeis_bfile, data_dir);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
