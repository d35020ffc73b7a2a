// One pass/fail line per acceptance criterion. `acceptance --conjecture-max-n 14`
// widens the unimodality range.

#include <sepperm/verify.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace sepperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void absorb(Outcome& o, const CheckReport& r) {
  if (!r.pass) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + r.id + ": " + r.witness;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

// CLI output against the golden files, and the golden files against the
// transcribed rows.
Outcome tables_criterion() {
  Outcome o;
  for (int which : {3, 4, 5}) {
    const std::string golden = read_file(std::string(SEPPERM_GOLDEN_DIR) + "/table" + std::to_string(which) + ".txt");
    std::string transcribed;
    for (auto row : distribution_table(which).rows) transcribed += std::string(row) + "\n";
    if (golden != transcribed) {
      o.pass = false;
      o.detail += "golden table" + std::to_string(which) + " differs from reference rows; ";
    }
    int status = 0;
    const std::string out =
        run_command(std::string("\"") + SEPPERM_CLI + "\" --no-cache tables " + std::to_string(which), status);
    if (status != 0 || out != golden) {
      o.pass = false;
      o.detail += "tables " + std::to_string(which) + " output differs from golden file; ";
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--conjecture-max-n") opt.conjecture_max_n = std::atoi(argv[i + 1]);
  VerifyContext ctx(opt);

  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  auto checks = [&](std::function<std::vector<CheckReport>()> f) {
    return [f] {
      Outcome o;
      for (const auto& r : f()) absorb(o, r);
      return o;
    };
  };

  const std::vector<Criterion> criteria = {
      {1, "separable and irreducible counts, Schroeder forms, n<=12", checks([&] {
         return std::vector{verify_separable_counts(ctx, 12), verify_schroeder_identities(ctx, 12)};
       })},
      {2, "filter and structural enumeration agree, n<=9",
       checks([&] { return std::vector{verify_filter_structural(9)}; })},
      {3, "tables 3, 4, 5 byte-match", tables_criterion},
      {4, "six-variable fixpoint equals enumeration at order 9",
       checks([&] { return std::vector{verify_master_fixpoint(ctx, 9)}; })},
      {5, "ascent/descent cubic and irreducible residuals vanish to order 14",
       checks([&] { return std::vector{verify_asc_des_relation(ctx, 14)}; })},
      {6, "closed forms vs fixpoint (order 12) and enumeration (order 9)", checks([&] {
         return std::vector{
             verify_counting_radicals(ctx, 20),
             verify_single_closed_forms(ctx, 12, 9),
             verify_closed_form_family(ctx, "pair-lmax-rmax-closed-forms", closed_form_cases(2, PairFamily::lmax_rmax), 12, 9),
             verify_closed_form_family(ctx, "pair-rmax-lmin-closed-forms", closed_form_cases(2, PairFamily::rmax_lmin), 12, 9),
             verify_closed_form_family(ctx, "triple-closed-forms", closed_form_cases(3), 12, 9),
             verify_quad_closed_form(ctx, 12, 9),
             verify_transfer_table_cells(ctx, 12),
         };
       })},
      {7, "symmetries, factorizations and class transfer, n<=8, plus negative controls", checks([&] {
         return std::vector{verify_equidistribution(ctx, 8), verify_reducible_factorization(ctx, 12, 8),
                            verify_irreducible_reducible_transfer(ctx, 9), verify_negative_controls(ctx)};
       })},
      {8, "eight displayed series expansions", checks([&] { return std::vector{verify_series_expansions(ctx)}; })},
      {9, "unimodality with stated peaks, n<=" + std::to_string(opt.conjecture_max_n) + " (finite-range evidence)",
       checks([&] {
         std::vector<CheckReport> out;
         for (const auto& claim : unimodality_claims())
           out.push_back(check_unimodality_claim(ctx, claim, opt.conjecture_max_n));
         return out;
       })},
      {10, "rising factorial and Eulerian censuses on S_n, n<=8",
       checks([&] { return std::vector{verify_rising_factorial_eulerian(8)}; })},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                o.pass ? "" : " -- ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
