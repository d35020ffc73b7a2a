#pragma once

#include <sepperm/monomial.hpp>
#include <sepperm/ring.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sepperm {

/// Sparse polynomial in (p, q, x, y, u, v) with coefficients in C.
///
/// Terms are kept sorted by packed monomial key with no stored zeros, so
/// equality is structural and iteration order is canonical.
template <class C>
class Poly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  Poly() = default;
  explicit Poly(const C& constant) {
    if (constant != 0) terms_.emplace_back(Monomial(), constant);
  }

  static Poly term(Monomial m, const C& c = C(1)) {
    Poly r;
    if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }
  static Poly variable(Var v) { return term(Monomial::of(v)); }

  /// Builds from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly r;
    for (auto& [m, c] : terms) {
      if (!r.terms_.empty() && r.terms_.back().first == m) {
        r.terms_.back().second += c;
      } else {
        r.terms_.emplace_back(m, std::move(c));
      }
    }
    r.drop_zeros();
    return r;
  }

  /// Parses the notation used for displayed expansions: "x^4y + 3x^3y^2 - 2".
  static Poly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// The value if this polynomial is a constant (including zero).
  std::optional<C> constant_value() const {
    if (terms_.empty()) return C(0);
    if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
    return std::nullopt;
  }

  C coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }

  int degree(Var v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
  }

  C coefficient_sum() const {
    C s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  Poly& operator+=(const Poly& o) { return merge(o, false); }
  Poly& operator-=(const Poly& o) { return merge(o, true); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Poly& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= s;
    }
    return *this;
  }

  /// Multiplication by a single monomial only shifts keys; order is preserved.
  Poly times(Monomial m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }

  /// Evaluates every variable in `vars` at 1.
  Poly specialize(VarSet vars) const {
    if (vars.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m.without(vars), c);
    return from_terms(std::move(out));
  }

  /// Substitutes variable kAllVars[i] by target[i] for every i.
  Poly rename(const std::array<Var, kNumVars>& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      std::array<int, kNumVars> e{};
      for (int i = 0; i < kNumVars; ++i) e[static_cast<int>(target[i])] += m.exponent(kAllVars[i]);
      out.emplace_back(Monomial::from_exponents(e), c);
    }
    return from_terms(std::move(out));
  }

  /// Variables with a nonzero exponent somewhere.
  VarSet support() const {
    VarSet s;
    for (const auto& t : terms_)
      for (Var v : kAllVars)
        if (t.first.exponent(v) > 0) s = s | VarSet{v};
    return s;
  }

  bool operator==(const Poly&) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest total degree first reads closest to the usual notation.
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      return a->first.total_degree() > b->first.total_degree();
    });
    bool first = true;
    for (const Term* t : order) {
      C c = t->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (!first) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      first = false;
      std::string mono = t->first.to_string();
      if (mono.empty()) {
        s += c.str();
      } else {
        if (c != 1) s += c.str();
        s += mono;
      }
    }
    return s;
  }

 private:
  Poly& merge(const Poly& o, bool negate) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.emplace_back(b->first, negate ? C(-b->second) : b->second);
        ++b;
      } else {
        C c = std::move(a->second);
        if (negate) c -= b->second;
        else c += b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
  }

  std::vector<Term> terms_;
};

/// Accumulates sums of products of polynomials into one hash table before
/// producing a sorted polynomial.
template <class C>
class ProductAccumulator {
 public:
  void add_product(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc_.reserve(acc_.size() + std::min<std::size_t>(a.size() * b.size(), 1u << 16));
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        acc_[(ma * mb).packed()] += ca * cb;
      }
    }
  }

  void add(const Poly<C>& a) {
    for (const auto& [m, c] : a.terms()) acc_[m.packed()] += c;
  }

  Poly<C> finish() {
    std::vector<typename Poly<C>::Term> terms;
    terms.reserve(acc_.size());
    for (auto& [k, c] : acc_) {
      if (c != 0) terms.emplace_back(Monomial::from_packed(k), std::move(c));
    }
    acc_.clear();
    return Poly<C>::from_terms(std::move(terms));
  }

 private:
  std::unordered_map<std::uint64_t, C> acc_;
};

template <class C>
Poly<C> operator*(const Poly<C>& a, const Poly<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms().front().second == 1) return b.times(a.terms().front().first);
  if (b.size() == 1 && b.terms().front().second == 1) return a.times(b.terms().front().first);
  ProductAccumulator<C> acc;
  acc.add_product(a, b);
  return acc.finish();
}

template <class C>
Poly<C> Poly<C>::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::optional<std::string> {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return std::nullopt;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    C coeff(1);
    if (auto digits = read_int()) coeff = C(*digits);
    Monomial m;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
      Var v = parse_var(text[i++]);
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        auto digits = read_int();
        if (!digits) throw std::invalid_argument("missing exponent in polynomial");
        e = std::stoi(*digits);
      }
      m = m * Monomial::of(v, e);
    }
    terms.emplace_back(m, negative ? C(-coeff) : coeff);
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-') {
      throw std::invalid_argument("unexpected character in polynomial: " + std::string(1, text[i]));
    }
    negative = text[i] == '-';
    ++i;
  }
  return from_terms(std::move(terms));
}

}  // namespace sepperm
