#pragma once

#include <sepperm/enumerate.hpp>
#include <sepperm/series.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace sepperm {

enum class PermClass { all, irreducible, reducible };

inline std::string_view class_name(PermClass c) {
  switch (c) {
    case PermClass::all: return "all";
    case PermClass::irreducible: return "irreducible";
    case PermClass::reducible: return "reducible";
  }
  return "?";
}

inline PermClass parse_class(std::string_view s) {
  if (s == "all") return PermClass::all;
  if (s == "irr" || s == "irreducible") return PermClass::irreducible;
  if (s == "red" || s == "reducible") return PermClass::reducible;
  throw std::invalid_argument("unknown class '" + std::string(s) + "' (expected all, irr, red)");
}

/// The variable recording each statistic in the master series.
inline constexpr Var stat_var(Stat s) {
  switch (s) {
    case Stat::asc: return Var::p;
    case Stat::des: return Var::q;
    case Stat::lmax: return Var::x;
    case Stat::rmax: return Var::y;
    case Stat::lmin: return Var::u;
    case Stat::rmin: return Var::v;
  }
  return Var::p;
}

inline VarSet stat_vars(std::span<const Stat> stats) {
  VarSet s;
  for (Stat st : stats) s = s | VarSet{stat_var(st)};
  return s;
}

/// t^n p^asc q^des x^lmax y^rmax u^lmin v^rmin for one profile.
inline Monomial profile_monomial(const StatProfile& s) {
  return Monomial::from_exponents({s.asc, s.des, s.lmax, s.rmax, s.lmin, s.rmin});
}

/// Default enumeration cap for distribution building; up to kStreamMaxLength on request.
inline constexpr int kCensusDefaultMaxLength = 12;

/// Six-variable census of one length: the coefficient of t^n in S and I.
struct LengthCensus {
  Poly<Integer> all;
  Poly<Integer> irreducible;
};

/// Enumerates length n once and tallies every statistic profile. With
/// threads > 1 the top-level block choices are split across workers and the
/// partial tallies summed.
inline LengthCensus census_length(int n, int threads = 1) {
  using Tally = std::unordered_map<std::uint64_t, std::uint64_t>;
  struct Partial {
    Tally all, irr;
  };
  auto work = [n](int part, int parts, Partial& out) {
    for_each_separable(
        n,
        [&](std::span<const int> v) {
          const auto key = profile_monomial(stats_of(v)).packed();
          ++out.all[key];
          if (is_irreducible(v)) ++out.irr[key];
        },
        part, parts);
  };
  threads = std::max(1, threads);
  std::vector<Partial> partials(static_cast<std::size_t>(threads));
  if (threads == 1) {
    work(0, 1, partials[0]);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads, std::ref(partials[static_cast<std::size_t>(t)]));
  }
  auto to_poly = [&](Tally Partial::*field) {
    std::vector<Poly<Integer>::Term> terms;
    for (auto& part : partials)
      for (auto& [k, c] : part.*field) terms.emplace_back(Monomial::from_packed(k), Integer(c));
    return Poly<Integer>::from_terms(std::move(terms));
  };
  return {to_poly(&Partial::all), to_poly(&Partial::irr)};
}

/// Enumeration-built series for lengths 1..max_n, cached per length.
class Census {
 public:
  explicit Census(int threads = 1) : threads_(threads) {}

  const LengthCensus& length(int n) {
    if (n < 1) throw std::out_of_range("census length must be at least 1");
    if (n > kStreamMaxLength) {
      throw std::out_of_range("census capped at n=" + std::to_string(kStreamMaxLength));
    }
    auto it = rows_.find(n);
    if (it == rows_.end()) it = rows_.emplace(n, census_length(n, threads_)).first;
    return it->second;
  }

  Poly<Integer> row(int n, PermClass cls) {
    const LengthCensus& c = length(n);
    switch (cls) {
      case PermClass::all: return c.all;
      case PermClass::irreducible: return c.irreducible;
      case PermClass::reducible: return c.all - c.irreducible;
    }
    return {};
  }

 private:
  int threads_;
  std::map<int, LengthCensus> rows_;
};

/// Coefficient of t^n is the sum over the class of the profile monomials.
inline ZSeries series_from_enumeration(int order, PermClass cls, Census& census) {
  ZSeries s(order);
  for (int n = 1; n <= order; ++n) s.coeff(n) = census.row(n, cls);
  return s;
}

inline ZSeries series_from_enumeration(int order, PermClass cls) {
  Census census;
  return series_from_enumeration(order, cls, census);
}

/// Exact counts by statistic-value tuple, per length.
struct DistTable {
  PermClass cls = PermClass::all;
  std::vector<Stat> stats;
  std::map<int, std::map<std::vector<int>, Integer>> rows;

  Integer row_total(int n) const {
    Integer total = 0;
    auto it = rows.find(n);
    if (it != rows.end())
      for (const auto& [values, count] : it->second) total += count;
    return total;
  }

  /// Single-statistic row as a dense vector indexed k = 1..max(k).
  std::vector<Integer> dense_row(int n) const {
    if (stats.size() != 1) throw std::logic_error("dense_row needs exactly one statistic");
    std::vector<Integer> out;
    auto it = rows.find(n);
    if (it == rows.end()) return out;
    for (const auto& [values, count] : it->second) {
      const int k = values[0];
      if (k < 0) throw std::logic_error("negative statistic value");
      if (static_cast<int>(out.size()) < k) out.resize(static_cast<std::size_t>(k), Integer(0));
      if (k >= 1) out[static_cast<std::size_t>(k - 1)] += count;
    }
    return out;
  }
};

/// Projects a six-variable coefficient polynomial onto the chosen statistics.
inline std::map<std::vector<int>, Integer> project_row(const Poly<Integer>& poly, std::span<const Stat> stats) {
  std::map<std::vector<int>, Integer> row;
  for (const auto& [m, c] : poly.terms()) {
    std::vector<int> key;
    key.reserve(stats.size());
    for (Stat s : stats) key.push_back(m.exponent(stat_var(s)));
    row[key] += c;
  }
  return row;
}

inline DistTable dist_from_series(const ZSeries& series, PermClass cls, std::vector<Stat> stats, int min_n = 1) {
  DistTable t{cls, std::move(stats), {}};
  for (int n = min_n; n <= series.order(); ++n) t.rows[n] = project_row(series[n], t.stats);
  return t;
}

/// Census row of length n for one class and statistic tuple.
inline DistTable dist_from_enumeration(int n, PermClass cls, std::vector<Stat> stats, Census& census,
                                       int cap = kCensusDefaultMaxLength) {
  if (n < 1 || n > cap) {
    throw std::out_of_range("distribution enumeration capped at n=" + std::to_string(cap) +
                            " (requested " + std::to_string(n) + ")");
  }
  DistTable t{cls, std::move(stats), {}};
  t.rows[n] = project_row(census.row(n, cls), t.stats);
  return t;
}

inline DistTable dist_from_enumeration(int n, PermClass cls, std::vector<Stat> stats) {
  Census census;
  return dist_from_enumeration(n, cls, std::move(stats), census);
}

}  // namespace sepperm
