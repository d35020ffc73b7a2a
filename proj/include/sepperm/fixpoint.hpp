#pragma once

#include <sepperm/series.hpp>

#include <stdexcept>
#include <string>

namespace sepperm {

/// S: all separable permutations, I: irreducible ones, as t-series tracking
/// the active statistic variables.
struct MasterSeries {
  ZSeries all;
  ZSeries irreducible;
  VarSet active = VarSet::all();

  ZSeries reducible() const { return all - irreducible; }
};

/// Solves the pair of functional equations
///
///   S = xyuv t + p S|_{y=1} I|_{u=1} + q (S|_{v=1} - I|_{v=1} + xyu t) S|_{x=1}
///   I = xyuv t +                       q (S|_{v=1} - I|_{v=1} + xyu t) S|_{x=1}
///
/// order by order. Each product has t-valuation at least 2, so the degree-n
/// coefficients depend only on lower ones. Variables outside `active` are
/// fixed to 1 throughout; since specialization is a ring map this yields
/// exactly the specialization of the full solution at a fraction of the cost.
inline MasterSeries solve_master_fixpoint(int order, VarSet active = VarSet::all()) {
  if (order < 1) throw std::invalid_argument("fixpoint order must be at least 1");
  using P = Poly<Integer>;
  auto var = [&](Var v) { return active.contains(v) ? P::variable(v) : P(Integer(1)); };
  auto mono = [&](std::initializer_list<Var> vs) {
    P r(Integer(1));
    for (Var v : vs) r = r * var(v);
    return r;
  };
  const P p = var(Var::p);
  const P q = var(Var::q);
  const P xyuv = mono({Var::x, Var::y, Var::u, Var::v});
  const P xyu = mono({Var::x, Var::y, Var::u});
  const VarSet set_y{Var::y}, set_u{Var::u}, set_v{Var::v}, set_x{Var::x};

  MasterSeries out{ZSeries(order), ZSeries(order), active};
  // Specialized lower-order coefficients, indexed by t-degree.
  std::vector<P> s_y1(static_cast<std::size_t>(order) + 1);  // S with y = 1
  std::vector<P> i_u1(s_y1.size());                          // I with u = 1
  std::vector<P> g_v1(s_y1.size());                          // (S - I + [n=1] xyu) with v = 1
  std::vector<P> s_x1(s_y1.size());                          // S with x = 1

  for (int n = 1; n <= order; ++n) {
    P s_n, i_n;
    if (n == 1) {
      s_n = xyuv;
      i_n = xyuv;
    } else {
      ProductAccumulator<Integer> sum_part;
      ProductAccumulator<Integer> skew_part;
      for (int i = 1; i < n; ++i) {
        sum_part.add_product(s_y1[i], i_u1[n - i]);
        skew_part.add_product(g_v1[i], s_x1[n - i]);
      }
      P skew = q * skew_part.finish();
      s_n = p * sum_part.finish() + skew;
      i_n = std::move(skew);
    }
    const auto k = static_cast<std::size_t>(n);
    s_y1[k] = s_n.specialize(set_y);
    i_u1[k] = i_n.specialize(set_u);
    P g = s_n - i_n;
    if (n == 1) g += xyu;
    g_v1[k] = g.specialize(set_v);
    s_x1[k] = s_n.specialize(set_x);
    out.all.coeff(n) = std::move(s_n);
    out.irreducible.coeff(n) = std::move(i_n);
  }
  return out;
}

}  // namespace sepperm
