#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepperm {

/// The six statistic-tracking variables, in their fixed canonical order.
/// p: ascents, q: descents, x: lmax, y: rmax, u: lmin, v: rmin.
enum class Var : std::uint8_t { p = 0, q = 1, x = 2, y = 3, u = 4, v = 5 };

inline constexpr int kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::p, Var::q, Var::x,
                                                       Var::y, Var::u, Var::v};

inline constexpr char var_name(Var v) {
  constexpr std::string_view names = "pqxyuv";
  return names[static_cast<int>(v)];
}

inline Var parse_var(char c) {
  switch (c) {
    case 'p': return Var::p;
    case 'q': return Var::q;
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'u': return Var::u;
    case 'v': return Var::v;
    default: throw std::invalid_argument(std::string("unknown variable '") + c + "'");
  }
}

/// A subset of the six variables.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) bits_ |= bit(v);
  }
  static constexpr VarSet all() { return VarSet(0x3f); }
  static constexpr VarSet none() { return VarSet(0); }

  /// Parses a string such as "xyuv"; commas are ignored.
  static VarSet parse(std::string_view text) {
    VarSet s;
    for (char c : text) {
      if (c == ',' || c == ' ') continue;
      s.bits_ |= bit(parse_var(c));
    }
    return s;
  }

  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet complement() const { return VarSet(~bits_ & 0x3f); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool operator==(const VarSet&) const = default;

  std::string to_string() const {
    std::string s;
    for (Var v : kAllVars)
      if (contains(v)) s += var_name(v);
    return s;
  }

 private:
  constexpr explicit VarSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Var v) { return std::uint8_t(1u << static_cast<int>(v)); }
  std::uint8_t bits_ = 0;
};

/// Exponent vector over (p, q, x, y, u, v), packed into 8-bit fields.
///
/// Exponents are limited to kMaxExponent so that adding two packed keys can
/// never carry between fields; multiplication checks the result.
class Monomial {
 public:
  static constexpr int kMaxExponent = 127;

  constexpr Monomial() = default;

  static Monomial from_exponents(const std::array<int, kNumVars>& e) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m = m.with(kAllVars[i], e[i]);
    return m;
  }
  static Monomial of(Var v, int e = 1) { return Monomial().with(v, e); }
  static constexpr Monomial from_packed(std::uint64_t packed) { return Monomial(packed); }

  constexpr int exponent(Var v) const {
    return static_cast<int>((packed_ >> shift(v)) & 0xffu);
  }

  Monomial with(Var v, int e) const {
    if (e < 0 || e > kMaxExponent) {
      throw std::out_of_range("monomial exponent out of range: " + std::to_string(e));
    }
    std::uint64_t cleared = packed_ & ~(std::uint64_t{0xff} << shift(v));
    return Monomial(cleared | (std::uint64_t(e) << shift(v)));
  }

  std::array<int, kNumVars> exponents() const {
    std::array<int, kNumVars> e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = exponent(kAllVars[i]);
    return e;
  }

  int total_degree() const {
    int d = 0;
    for (Var v : kAllVars) d += exponent(v);
    return d;
  }

  constexpr bool is_one() const { return packed_ == 0; }
  constexpr std::uint64_t packed() const { return packed_; }

  Monomial operator*(Monomial o) const {
    std::uint64_t sum = packed_ + o.packed_;
    if (sum & kHighBits) throw std::overflow_error("monomial exponent overflow");
    return Monomial(sum);
  }

  /// Drops the variables in `vars` (evaluates them at 1).
  Monomial without(VarSet vars) const {
    std::uint64_t mask = 0;
    for (Var v : kAllVars)
      if (vars.contains(v)) mask |= std::uint64_t{0xff} << shift(v);
    return Monomial(packed_ & ~mask);
  }

  constexpr auto operator<=>(const Monomial&) const = default;

  /// Variables in p,q,x,y,u,v order, e.g. "xy^3u^2"; the unit monomial renders as "".
  std::string to_string() const {
    std::string s;
    for (Var v : kAllVars) {
      int e = exponent(v);
      if (e == 0) continue;
      s += var_name(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  constexpr explicit Monomial(std::uint64_t packed) : packed_(packed) {}
  static constexpr int shift(Var v) { return 8 * static_cast<int>(v); }
  static constexpr std::uint64_t kHighBits = 0x0000808080808080ull;

  std::uint64_t packed_ = 0;
};

}  // namespace sepperm

template <>
struct std::hash<sepperm::Monomial> {
  std::size_t operator()(sepperm::Monomial m) const noexcept {
    std::uint64_t h = m.packed() * 0x9e3779b97f4a7c15ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
