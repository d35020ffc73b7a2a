// sepperm: enumerate separable permutations, build statistic distributions
// and series, print the published tables, and run the verification suite.

#include <sepperm/closed_forms.hpp>
#include <sepperm/distribution.hpp>
#include <sepperm/enumerate.hpp>
#include <sepperm/fixpoint.hpp>
#include <sepperm/series_io.hpp>
#include <sepperm/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sepperm;
using nlohmann::json;

struct Globals {
  int threads = 1;
  std::string cache_dir;
  bool no_cache = false;
};

SeriesCache make_cache(const Globals& g) {
  if (g.no_cache) return {};
  if (!g.cache_dir.empty()) return SeriesCache(g.cache_dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return SeriesCache(std::filesystem::path(xdg) / "sepperm");
  if (const char* home = std::getenv("HOME"); home && *home)
    return SeriesCache(std::filesystem::path(home) / ".cache" / "sepperm");
  return {};
}

std::vector<Stat> parse_stats(const std::string& list) {
  std::vector<Stat> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      out.push_back(parse_stat(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--stats", "unknown statistic '" + item + "' (expected asc, des, lmax, rmax, lmin, rmin)");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--stats", "at least one statistic required");
  return out;
}

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json profile_json(const StatProfile& s) {
  json j = json::object();
  for (Stat st : kAllStats) j[std::string(stat_name(st))] = s.get(st);
  return j;
}

// -- enumerate ---------------------------------------------------------------

int cmd_enumerate(int n, const std::string& method, const std::string& format, bool with_stats) {
  auto emit = [&](std::span<const int> v) {
    const Permutation pi(std::vector<int>(v.begin(), v.end()));
    if (format == "json") {
      json j = {{"perm", std::vector<int>(v.begin(), v.end())}};
      if (with_stats) j["stats"] = profile_json(stats(pi));
      std::cout << j.dump() << '\n';
    } else if (format == "csv") {
      std::cout << csv_field(pi.to_string());
      if (with_stats)
        for (Stat st : kAllStats) std::cout << ',' << stats(pi).get(st);
      std::cout << '\n';
    } else {
      std::cout << pi.to_string();
      if (with_stats) {
        const StatProfile s = stats(pi);
        for (Stat st : kAllStats) std::cout << ' ' << stat_name(st) << '=' << s.get(st);
      }
      std::cout << '\n';
    }
  };
  if (format == "csv") {
    std::cout << "perm";
    if (with_stats)
      for (Stat st : kAllStats) std::cout << ',' << stat_name(st);
    std::cout << '\n';
  }
  if (method == "filter") {
    for (const auto& pi : enumerate_filter(n)) emit(pi.values());
  } else if (n <= kMaterializeMaxLength) {
    for (const auto& pi : enumerate_structural(n)) emit(pi.values());
  } else {
    for_each_separable(n, emit);  // too many to sort in memory
  }
  return 0;
}

// -- dist --------------------------------------------------------------------

/// Distribution table of length n, from enumeration or from the fixpoint.
DistTable build_dist(int n, PermClass cls, const std::vector<Stat>& stats, const std::string& source, const Globals& g) {
  if (source == "series") {
    const MasterSeries m = solve_master_fixpoint(n, stat_vars(stats));
    const ZSeries s = cls == PermClass::all ? m.all : cls == PermClass::irreducible ? m.irreducible : m.reducible();
    DistTable t = dist_from_series(s, cls, stats, n);
    return t;
  }
  Census census(g.threads);
  return dist_from_enumeration(n, cls, stats, census, kStreamMaxLength);
}

int cmd_dist(int n, const std::string& cls_name, const std::string& stats_list, const std::string& format,
             const std::string& source, const Globals& g) {
  const PermClass cls = parse_class(cls_name);
  const std::vector<Stat> stats = parse_stats(stats_list);
  if (source == "enumeration" && n > kCensusDefaultMaxLength) {
    std::cerr << "note: enumerating length " << n << " (default cap " << kCensusDefaultMaxLength << ")\n";
  }
  const DistTable t = build_dist(n, cls, stats, source, g);
  if (format == "json") {
    json rows = json::object();
    for (const auto& [len, row] : t.rows) {
      json entries = json::array();
      for (const auto& [values, count] : row) entries.push_back({{"values", values}, {"count", count.str()}});
      rows[std::to_string(len)] = entries;
    }
    json stat_names = json::array();
    for (Stat s : t.stats) stat_names.push_back(stat_name(s));
    std::cout << json{{"class", class_name(t.cls)}, {"stats", stat_names}, {"rows", rows}}.dump() << '\n';
    return 0;
  }
  if (format == "csv") {
    std::cout << "n";
    for (Stat s : t.stats) std::cout << ',' << stat_name(s);
    std::cout << ",count\n";
    for (const auto& [len, row] : t.rows)
      for (const auto& [values, count] : row) {
        std::cout << len;
        for (int v : values) std::cout << ',' << v;
        std::cout << ',' << count.str() << '\n';
      }
    return 0;
  }
  for (const auto& [len, row] : t.rows)
    for (const auto& [values, count] : row) {
      std::cout << "n=" << len;
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << ' ' << stat_name(t.stats[i]) << '=' << values[i];
      std::cout << ": " << count.str() << '\n';
    }
  return 0;
}

// -- tables ------------------------------------------------------------------

int cmd_tables(int which, int max_n, const Globals& g) {
  const auto& table = distribution_table(which);
  if (max_n <= kCensusDefaultMaxLength) {
    Census census(g.threads);
    for (const auto& row : distribution_rows(census, table.stat, table.cls, max_n)) std::cout << row << '\n';
  } else {
    VerifyContext ctx;
    for (int n = 1; n <= max_n; ++n) std::cout << detail::join(fixpoint_row(ctx, table.stat, table.cls, n, max_n)) << '\n';
  }
  return 0;
}

// -- series ------------------------------------------------------------------

int cmd_series(const std::string& vars_text, const std::string& cls_name, int order, const std::string& source,
               const std::string& format, const Globals& g) {
  const VarSet vars = VarSet::parse(vars_text == "t" ? "" : vars_text);
  const PermClass cls = parse_class(cls_name);
  const std::string kept = vars.to_string();
  const std::string name = source + "-" + (kept.empty() ? "t" : kept) + "-" + std::string(class_name(cls));
  const SeriesCache cache = make_cache(g);
  std::optional<RSeries> s = cache.load(name, order);
  if (!s) {
    if (source == "closed") {
      std::vector<Stat> stats;
      for (Stat st : kAllStats)
        if (vars.contains(stat_var(st))) stats.push_back(st);
      ClosedForms cf(order);
      s = cf.evaluate(stats, cls);
    } else {
      const MasterSeries m = solve_master_fixpoint(order, vars);
      s = to_rational(cls == PermClass::all ? m.all : cls == PermClass::irreducible ? m.irreducible : m.reducible());
    }
    cache.store(name, *s);
  }
  if (format == "json") {
    std::cout << dump_series(*s, name);
  } else {
    for (int n = 0; n <= s->order(); ++n)
      if (!(*s)[n].is_zero()) std::cout << "t^" << n << ": " << (*s)[n].to_string() << '\n';
  }
  return 0;
}

// -- verify / conjectures ----------------------------------------------------

json report_json(const CheckReport& r, bool timing) {
  json j = {{"id", r.id},
            {"verdict", r.pass ? "pass" : "fail"},
            {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
            {"witness", r.witness},
            {"note", r.note}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

void print_report(const CheckReport& r, bool timing) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
  if (timing) std::cout << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
  if (!r.pass) {
    std::cout << " at " << r.first_failure.value_or(-1) << ": " << r.witness;
  }
  if (!r.note.empty()) std::cout << " [" << r.note << "]";
  std::cout << '\n';
}

int run_reports(const std::vector<CheckReport>& reports, bool as_json, bool timing) {
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (as_json) arr.push_back(report_json(r, timing));
    else print_report(r, timing);
  }
  if (as_json) std::cout << arr.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& selected, const VerifyOptions& opt, bool as_json, bool timing, bool list) {
  const auto checks = available_checks();
  if (list) {
    for (const auto& c : checks) std::cout << c.id << "  " << c.description << '\n';
    return 0;
  }
  std::vector<const NamedCheck*> run;
  for (const auto& id : selected) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const NamedCheck& c) { return c.id == id; });
    if (it == checks.end()) {
      std::string names;
      for (const auto& c : checks) names += (names.empty() ? "" : ", ") + c.id;
      throw CLI::ValidationError("verify", "unknown check '" + id + "'; available: " + names);
    }
    run.push_back(&*it);
  }
  if (run.empty())
    for (const auto& c : checks) run.push_back(&c);
  VerifyContext ctx(opt);
  std::vector<CheckReport> reports;
  for (const NamedCheck* c : run)
    for (auto& r : c->run(ctx)) {
      if (!as_json) print_report(r, timing), std::cout.flush();
      reports.push_back(std::move(r));
    }
  if (!as_json) return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
  return run_reports(reports, true, timing);
}

int cmd_conjectures(int max_n, bool as_json, bool timing, const Globals& g) {
  VerifyOptions opt;
  opt.conjecture_max_n = max_n;
  opt.threads = g.threads;
  VerifyContext ctx(opt);
  std::vector<CheckReport> reports;
  for (const auto& claim : unimodality_claims()) reports.push_back(check_unimodality_claim(ctx, claim, max_n));
  return run_reports(reports, as_json, timing);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable permutations: enumeration, statistic distributions, series and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker thread cap")->check(CLI::Range(1, 256));
  app.add_option("--cache-dir", g.cache_dir, "Series cache directory");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the series cache");

  int n = 0;
  std::string method = "structural", format = "lines", cls = "all", stats_list = "rmax", source = "enumeration";
  bool with_stats = false;
  auto* en = app.add_subcommand("enumerate", "List separable permutations of length n");
  en->add_option("n", n, "Length")->required();
  en->add_option("--method", method, "structural or filter")->check(CLI::IsMember({"structural", "filter"}));
  en->add_option("--format", format, "lines, csv or json")->check(CLI::IsMember({"lines", "csv", "json"}));
  en->add_flag("--with-stats", with_stats, "Append the six statistics");

  auto* di = app.add_subcommand("dist", "Distribution of statistics at length n");
  di->add_option("n", n, "Length")->required()->check(CLI::PositiveNumber);
  di->add_option("--class", cls, "all, irr or red");
  di->add_option("--stats", stats_list, "Comma-separated statistics");
  di->add_option("--format", format, "lines, csv or json")->check(CLI::IsMember({"lines", "csv", "json"}));
  di->add_option("--source", source, "enumeration or series")->check(CLI::IsMember({"enumeration", "series"}));

  int which = 0, max_n = 8;
  auto* ta = app.add_subcommand("tables", "Print a single-statistic distribution table (3, 4 or 5)");
  ta->add_option("which", which, "Table number")->required()->check(CLI::IsMember({3, 4, 5}));
  ta->add_option("--max-n", max_n, "Last row")->check(CLI::Range(1, 40));

  int order = 8;
  std::string vars = "xyuv";
  auto* se = app.add_subcommand("series", "Print a specialized generating function");
  se->add_option("vars", vars, "Variables kept (subset of pqxyuv, or t for none)");
  se->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 40));
  se->add_option("--class", cls, "all, irr or red");
  se->add_option("--source", source, "fixpoint or closed")->check(CLI::IsMember({"fixpoint", "closed"}));
  se->add_option("--format", format, "lines or json")->check(CLI::IsMember({"lines", "json"}));

  VerifyOptions vopt;
  std::vector<std::string> selected;
  bool as_json = false, timing = false, list = false;
  auto* ve = app.add_subcommand("verify", "Run verification checks (all by default)");
  ve->add_option("checks", selected, "Check ids (see --list)");
  ve->add_option("--order", vopt.order, "Six-variable series order")->check(CLI::Range(4, 16));
  ve->add_option("--small-order", vopt.small_order, "Order for few-variable checks")->check(CLI::Range(4, 60));
  ve->add_option("--max-n", vopt.exhaustive_max_n, "Exhaustive length bound")->check(CLI::Range(1, 10));
  ve->add_option("--conjecture-max-n", vopt.conjecture_max_n, "Unimodality range")->check(CLI::Range(1, 30));
  ve->add_flag("--json", as_json, "Emit the reports as JSON");
  ve->add_flag("--timing", timing, "Include runtimes");
  ve->add_flag("--list", list, "List check ids");

  int conj_max = 12;
  auto* co = app.add_subcommand("conjectures", "Unimodality of the max/min distributions (finite range)");
  co->add_option("--max-n", conj_max, "Largest length")->check(CLI::Range(1, 30));
  co->add_flag("--json", as_json, "Emit the reports as JSON");
  co->add_flag("--timing", timing, "Include runtimes");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) return cmd_enumerate(n, method, format, with_stats);
    if (*di) {
      if (source == "fixpoint") source = "series";
      return cmd_dist(n, cls, stats_list, format, source, g);
    }
    if (*ta) return cmd_tables(which, max_n, g);
    if (*se) return cmd_series(vars, cls, order, source == "enumeration" ? "fixpoint" : source, format, g);
    if (*ve) {
      vopt.threads = g.threads;
      return cmd_verify(selected, vopt, as_json, timing, list);
    }
    if (*co) return cmd_conjectures(conj_max, as_json, timing, g);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
