#pragma once
// Generalized Lidskii formulas: volume and lattice points of F_G(a) as sums
// over compositions dominating the shifted out-degree vector.
#include "flowpoly/combinat.hpp"
#include "flowpoly/graph.hpp"
#include "flowpoly/kostant.hpp"

namespace flowpoly {

inline NetFlow unit_flow(const DirectedMultigraph& g) {
  NetFlow a(g.num_vertices(), 0);
  a.front() = 1;
  a.back() = -1;
  return a;
}

namespace detail {

inline void check_netflow(const DirectedMultigraph& g, const NetFlow& a) {
  check_vector(g, a);
  for (int i = 0; i < g.n(); ++i)
    if (a[i] < 0) throw Error(Errc::BadParameters, "net flow entries a_1..a_n must be >= 0");
}

inline NetFlow shifted_target(const Composition& s, const Composition& t) {
  NetFlow v(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i] - t[i];
  return v;
}

// Sum over s dominating t of coeff(s) * K_G(s - t, 0); zero coefficients skip the Kostant call.
template <class Coeff>
BigCount dominance_sum(const DirectedMultigraph& g, Coeff&& coeff) {
  auto t = shifted_outdegree(g);
  KostantEvaluator ev(g);
  BigCount total = 0;
  for_each_dominating(t, [&](const Composition& s) {
    BigCount c = coeff(s);
    if (c == 0) return;
    total += c * ev.count(shifted_target(s, t));
  });
  return total;
}

}  // namespace detail

inline BigCount volume(const DirectedMultigraph& g, const NetFlow& a) {
  detail::check_netflow(g, a);
  long long mn = g.m() - g.n();
  return detail::dominance_sum(g, [&](const Composition& s) {
    BigCount c = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) continue;  // 0^0 = 1
      if (a[i] == 0) return BigCount(0);
      c *= ipow(BigCount(a[i]), s[i]);
    }
    return c * multinomial(mn, s);
  });
}

inline BigCount lattice_points_binomial(const DirectedMultigraph& g, const NetFlow& a) {
  detail::check_netflow(g, a);
  auto t = shifted_outdegree(g);
  return detail::dominance_sum(g, [&](const Composition& s) {
    BigCount c = 1;
    for (std::size_t i = 0; i < s.size() && c != 0; ++i) c *= binomial(a[i] + t[i], s[i]);
    return c;
  });
}

// Uses u_i = indeg(i) - 1 for vertex i itself (so u_1 = -1); the top
// a_i - u_i may go negative, hence generalized multiset coefficients.
inline BigCount lattice_points_multiset(const DirectedMultigraph& g, const NetFlow& a) {
  detail::check_netflow(g, a);
  return detail::dominance_sum(g, [&](const Composition& s) {
    BigCount c = 1;
    for (std::size_t i = 0; i < s.size() && c != 0; ++i) {
      long long ui = g.indegree(static_cast<int>(i) + 1) - 1;
      c *= gmultichoose(a[i] - ui, s[i]);
    }
    return c;
  });
}

// Normalized volume at (1,0,...,0,-1), computed as K_G(v_out) and K_G(v_in).
inline BigCount volume_unit_flow(const DirectedMultigraph& g) {
  KostantEvaluator ev(g);
  BigCount x = ev.count(v_out(g));
  KostantEvaluator ev2(g);
  BigCount y = ev2.count(v_in(g));
  if (x != y)
    throw Error(Errc::InternalMismatch,
                "K(v_out) = " + x.str() + " but K(v_in) = " + y.str());
  return x;
}

}  // namespace flowpoly
