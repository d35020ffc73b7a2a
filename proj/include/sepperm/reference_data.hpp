#pragma once

// Published values the verifier checks against: the three distribution
// tables and the displayed initial terms of the specialized series.

#include <sepperm/distribution.hpp>
#include <sepperm/monomial.hpp>

#include <array>
#include <string_view>
#include <vector>

namespace sepperm::reference {

/// One published single-statistic distribution table, rows n = 1..8.
struct DistributionTable {
  int number;
  std::string_view title;
  Stat stat;
  PermClass cls;
  std::array<std::string_view, 8> rows;
};

inline const std::array<DistributionTable, 3>& distribution_tables() {
  static const std::array<DistributionTable, 3> tables = {{
      {3,
       "lmax/rmax/lmin/rmin on separable permutations",
       Stat::rmax,
       PermClass::all,
       {"1", "1 1", "2 3 1", "6 9 6 1", "22 31 26 10 1", "90 120 108 60 15 1",
        "394 504 461 305 120 21 1", "1806 2240 2046 1475 745 217 28 1"}},
      {4,
       "rmax or lmin on irreducible (lmax or rmin on reducible) separable permutations",
       Stat::rmax,
       PermClass::irreducible,
       {"1", "0 1", "0 2 1", "0 5 5 1", "0 16 19 9 1", "0 60 73 49 14 1", "0 248 298 232 104 20 1",
        "0 1092 1288 1069 607 195 27 1"}},
      {5,
       "lmax or rmin on irreducible (rmax or lmin on reducible) separable permutations",
       Stat::lmax,
       PermClass::irreducible,
       {"1", "1", "2 1", "6 4 1", "22 15 7 1", "90 60 35 11 1", "394 256 163 73 16 1",
        "1806 1148 758 406 138 22 1"}},
  }};
  return tables;
}

/// Displayed initial terms of one specialized series.
struct SeriesSnippet {
  std::string_view id;
  VarSet vars;
  PermClass cls;
  std::vector<std::string_view> coefficients;  // t^1, t^2, ...
};

inline const std::vector<SeriesSnippet>& series_snippets() {
  static const std::vector<SeriesSnippet> snippets = {
      {"S(t,x,y)", VarSet{Var::x, Var::y}, PermClass::all,
       {"xy", "x^2y + xy^2", "x^3y + 2x^2y^2 + xy^3 + x^2y + xy^2",
        "x^4y + 3x^3y^2 + 3x^2y^3 + xy^4 + 3x^3y + 4x^2y^2 + 3xy^3 + 2x^2y + 2xy^2"}},
      {"I(t,x,y)", VarSet{Var::x, Var::y}, PermClass::irreducible,
       {"xy", "xy^2", "x^2y^2 + xy^3 + xy^2", "x^3y^2 + 2x^2y^3 + xy^4 + 2x^2y^2 + 3xy^3 + 2xy^2",
        "x^4y^2 + 3x^3y^3 + 3x^2y^4 + xy^5 + 4x^3y^2 + 7x^2y^3 + 6xy^4 + 5x^2y^2 + 9xy^3 + 6xy^2"}},
      {"S(t,y,u)", VarSet{Var::y, Var::u}, PermClass::all,
       {"uy", "u^2y^2 + uy", "u^3y^3 + 2u^2y^2 + u^2y + uy^2 + uy",
        "u^4y^4 + 3u^3y^3 + 2u^3y^2 + 2u^2y^3 + u^3y + 4u^2y^2 + uy^3 + 3u^2y + 3uy^2 + 2uy"}},
      {"I(t,y,u)", VarSet{Var::y, Var::u}, PermClass::irreducible,
       {"uy", "u^2y^2", "u^3y^3 + 2u^2y^2", "u^4y^4 + 3u^3y^3 + 2u^3y^2 + 2u^2y^3 + 3u^2y^2",
        "u^5y^5 + 4u^4y^4 + 3u^4y^3 + 3u^3y^4 + 2u^4y^2 + 8u^3y^3 + 2u^2y^4 + 8u^3y^2 + 8u^2y^3 + 6u^2y^2"}},
      {"S(t,x,y,u)", VarSet{Var::x, Var::y, Var::u}, PermClass::all,
       {"uxy", "u^2xy^2 + ux^2y", "u^3xy^3 + u^2x^2y^2 + u^2x^2y + ux^3y + u^2xy^2 + ux^2y^2",
        "u^4xy^4 + u^3x^2y^3 + u^3x^2y^2 + u^2x^3y^2 + 2u^3xy^3 + u^2x^2y^3 + u^3x^2y + 2u^2x^3y + "
        "ux^4y + u^3xy^2 + 2u^2x^2y^2 + 2ux^3y^2 + u^2xy^3 + ux^2y^3 + u^2x^2y + ux^3y + u^2xy^2 + "
        "ux^2y^2"}},
      {"I(t,x,y,u)", VarSet{Var::x, Var::y, Var::u}, PermClass::irreducible,
       {"uxy", "u^2xy^2", "u^3xy^3 + u^2x^2y^2 + u^2xy^2",
        "u^4xy^4 + u^3x^2y^3 + u^3x^2y^2 + u^2x^3y^2 + 2u^3xy^3 + u^2x^2y^3 + u^3xy^2 + u^2x^2y^2 + "
        "u^2xy^3 + u^2xy^2"}},
      {"S(t,x,y,u,v)", VarSet{Var::x, Var::y, Var::u, Var::v}, PermClass::all,
       {"uvxy", "uv^2x^2y + u^2vxy^2",
        "uv^3x^3y + u^3vxy^3 + u^2v^2x^2y + u^2v^2xy^2 + u^2vx^2y^2 + uv^2x^2y^2",
        "uv^4x^4y + u^4vxy^4 + u^2v^3x^3y + uv^3x^3y^2 + u^3v^2xy^3 + u^3vx^2y^3 + u^3v^2x^2y + "
        "u^2v^3x^2y + u^2v^2x^3y + uv^3x^3y + u^3v^2xy^2 + u^2v^3xy^2 + u^3vx^2y^2 + 2u^2v^2x^2y^2 + "
        "uv^3x^2y^2 + u^2vx^3y^2 + uv^2x^3y^2 + u^3vxy^3 + u^2v^2xy^3 + u^2vx^2y^3 + uv^2x^2y^3"}},
      {"I(t,x,y,u,v)", VarSet{Var::x, Var::y, Var::u, Var::v}, PermClass::irreducible,
       {"uvxy", "u^2vxy^2", "u^3vxy^3 + u^2v^2xy^2 + u^2vx^2y^2",
        "u^4vxy^4 + u^3v^2xy^3 + u^3vx^2y^3 + u^3v^2xy^2 + u^2v^3xy^2 + u^3vx^2y^2 + u^2v^2x^2y^2 + "
        "u^2vx^3y^2 + u^3vxy^3 + u^2v^2xy^3 + u^2vx^2y^3"}},
  };
  return snippets;
}

/// Separable counts for n = 1..7 and irreducible ones.
inline constexpr std::array<int, 7> kSeparableCounts = {1, 2, 6, 22, 90, 394, 1806};
inline constexpr std::array<int, 7> kIrreducibleCounts = {1, 1, 3, 11, 45, 197, 903};

}  // namespace sepperm::reference
