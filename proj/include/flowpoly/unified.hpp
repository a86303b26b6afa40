#pragma once
// Unified diagrams: enumeration at a general net flow, column levels,
// truncated level-(k,i) diagrams of Car_{n+1}^{(k)}, k-hulls, completion
// counts, the Theta bijection onto multi-labeled Dyck paths, the cyclic
// colour action, and the partition of the multinomial simplex.
//
// Throughout, a = n-k and N = m-n-i = (k+1)a-2-i is the height of the initial
// part.  A truncated diagram keeps the tail (columns k+1..n) and the a-1-i
// gravity segments that live in the rectangle right of the initial part;
// segment [l, k+h] has h in 0..a-2.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flowpoly/gravity.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/lidskii.hpp"
#include "flowpoly/paths.hpp"

namespace flowpoly {

// ------------------------------------------------------------ net flows

// (1, ..., 1, -n)
inline NetFlow ones_flow(const DirectedMultigraph& g) {
  NetFlow a(g.num_vertices(), 1);
  a.back() = -static_cast<long long>(g.n());
  return a;
}

// (x^k, y^(n-k), -(kx + (n-k)y)) on Car_{n+1}^{(k)}
inline NetFlow xy_flow_caracol(int n, int k, long long x, long long y) {
  detail::check_nk(n, k);
  NetFlow a;
  for (int j = 0; j < k; ++j) a.push_back(x);
  for (int j = k; j < n; ++j) a.push_back(y);
  a.push_back(-(k * x + (n - k) * y));
  return a;
}

// (kx, y^a, -(kx + ay)) on the multicaracol graph with a+2 vertices
inline NetFlow xy_flow_mcar(int a, int k, long long x, long long y) {
  if (a < 1 || k < 1) throw Error(Errc::BadParameters, "need a, k >= 1");
  NetFlow v{k * x};
  for (int j = 0; j < a; ++j) v.push_back(y);
  v.push_back(-(k * x + a * y));
  return v;
}

// ------------------------------------------------------------ closed forms

inline BigCount volume_closed_form(int n, int k, long long x, long long y) {
  detail::check_nk(n, k);
  if (x < 0 || y < 0) throw Error(Errc::BadParameters, "x, y must be nonnegative");
  int a = n - k, b = k * a - 1;
  // b = 0 only for (n,k) = (2,1), where k^(b-1) = 1
  BigCount kp = b >= 1 ? ipow(k, b - 1) : BigCount(1);
  return rational_catalan(a, b) * kp * ipow(x, b) * ipow(k * x + (n - k) * y, a - 1);
}

inline BigCount volume_closed_form_mcar(int a, int k, long long x, long long y) {
  if (a < 1 || k < 1) throw Error(Errc::BadParameters, "need a, k >= 1");
  if (x < 0 || y < 0) throw Error(Errc::BadParameters, "x, y must be nonnegative");
  return rational_catalan(a, k * a - 1) * ipow(k * x, k * a - 1) * ipow(k * x + a * y, a - 1);
}

// ------------------------------------------------------------ unified diagrams

// sigma: column labeling word (labels 1..m-n); alpha[j]: ordered tuple of
// net-flow labels in column j; gamma: an integral flow of (s-t, 0), indexed
// like g.edge_list(), standing in for its gravity diagram.
struct UnifiedDiagram {
  TDyckPath path;
  std::vector<int> sigma;
  std::vector<std::vector<long long>> alpha;
  std::vector<long long> gamma;
  bool operator==(const UnifiedDiagram&) const = default;
};

// Count mode: sum over s of multinomial * a^s * K(s-t, 0).
inline BigCount enumerate_unified(const DirectedMultigraph& g, const NetFlow& a) {
  detail::check_netflow(g, a);
  auto t = shifted_outdegree(g);
  long long q = sum_of(t);
  KostantEvaluator ev(g);
  BigCount total = 0;
  for_each_dominating(t, [&](const Composition& s) {
    BigCount w = 1;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == 0) continue;
      if (a[j] == 0) return;  // no north steps over a zero net flow
      w *= ipow(a[j], s[j]);
    }
    total += w * multinomial(q, s) * ev.count(detail::shifted_target(s, t));
  });
  return total;
}

// Iterate mode: materializes every (s, sigma, alpha, Gamma); returns the count.
template <class F>
std::uint64_t for_each_unified(const DirectedMultigraph& g, const NetFlow& a, F&& f) {
  detail::check_netflow(g, a);
  auto t = shifted_outdegree(g);
  std::uint64_t count = 0;
  for_each_dominating(t, [&](const Composition& s) {
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] > 0 && a[j] == 0) return;
    auto flows = integral_flows(g, detail::shifted_target(s, t));
    if (flows.empty()) return;
    // every column's tuple in [a_j]^{s_j}
    std::vector<std::vector<long long>> alpha(s.size());
    std::function<void(std::size_t, const std::vector<int>&)> tuples =
        [&](std::size_t j, const std::vector<int>& sigma) {
          if (j == s.size()) {
            for (auto& fl : flows) {
              ++count;
              f(static_cast<const UnifiedDiagram&>(UnifiedDiagram{{s, t}, sigma, alpha, fl}));
            }
            return;
          }
          alpha[j].assign(s[j], 1);
          for (;;) {
            tuples(j + 1, sigma);
            int p = s[j] - 1;
            while (p >= 0 && alpha[j][p] == a[j]) alpha[j][p--] = 1;
            if (p < 0) break;
            ++alpha[j][p];
          }
        };
    for_each_column_labeling(s, [&](const std::vector<int>& sigma) { tuples(0, sigma); });
  });
  return count;
}

inline std::uint64_t count_unified_iterate(const DirectedMultigraph& g, const NetFlow& a) {
  return for_each_unified(g, a, [](const UnifiedDiagram&) {});
}

// q - (s_1 + ... + s_col), 1-based col.
inline long long column_level(const TDyckPath& p, int col) {
  if (col < 1 || col > static_cast<int>(p.shape.size()))
    throw Error(Errc::BadParameters, "column out of range");
  long long q = sum_of(p.shape), s = 0;
  for (int j = 0; j < col; ++j) s += p.shape[j];
  return q - s;
}

// ------------------------------------------------------------ truncated

struct TruncatedDiagram {
  int n = 0, k = 0, i = 0;
  Composition q;              // north steps in columns k+1..n
  std::vector<int> kappa;     // labels of the tail, column by column
  std::vector<Segment> gamma; // [l, k+h], canonical out-degree order
  bool operator==(const TruncatedDiagram&) const = default;
};

namespace detail {

inline void check_level(int n, int k, int i) {
  check_nk(n, k);
  if (i < 0 || i > n - k - 1) throw Error(Errc::BadParameters, "need 0 <= i <= n-k-1");
}

// Tail column k+h (h >= 1) has a-1-i+Q_h-h free dots; at most that many
// segments may reach it.
inline bool truncated_fits(int n, int k, int i, const Composition& q, const std::vector<Segment>& gamma) {
  int a = n - k;
  long long Q = 0;
  for (int h = 1; h <= a - 1; ++h) {
    Q += q[h - 1];
    long long reach = 0;
    for (auto& s : gamma) reach += s.right >= k + h;
    if (a - 1 - i + Q - h < reach) return false;
  }
  return true;
}

inline void renumber(std::vector<Segment>& segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
    if (out_less(x, y)) return true;
    if (out_less(y, x)) return false;
    return x.left > y.left;
  });
  for (std::size_t r = 0; r < segs.size(); ++r) segs[r].row = static_cast<int>(r) + 1;
}

}  // namespace detail

inline long long initial_height(int n, int k, int i) { return 1LL * (k + 1) * (n - k) - 2 - i; }

inline bool is_valid(const TruncatedDiagram& U) {
  int a = U.n - U.k;
  if (U.k < 1 || a < 1 || U.i < 0 || U.i > a - 1) return false;
  if (static_cast<int>(U.q.size()) != a || U.q.back() != 0) return false;
  for (int x : U.q)
    if (x < 0) return false;
  if (sum_of(U.q) != U.i || static_cast<int>(U.kappa.size()) != U.i) return false;
  std::vector<int> seen(U.i + 1, 0);
  std::size_t pos = 0;
  for (int x : U.q) {
    for (int c = 0; c < x; ++c) {
      int L = U.kappa[pos + c];
      if (L < 1 || L > U.i || seen[L]++) return false;
      if (c > 0 && U.kappa[pos + c - 1] > L) return false;
    }
    pos += x;
  }
  if (static_cast<int>(U.gamma.size()) != a - 1 - U.i) return false;
  for (std::size_t r = 0; r < U.gamma.size(); ++r) {
    auto& s = U.gamma[r];
    if (s.row != static_cast<int>(r) + 1 || s.left < 1 || s.left > U.k) return false;
    if (s.right < U.k || s.right > U.k + a - 2) return false;
    if (r > 0 && detail::out_less(s, U.gamma[r - 1])) return false;
  }
  return detail::truncated_fits(U.n, U.k, U.i, U.q, U.gamma);
}

// Each truncated level-(k,i) diagram exactly once: tail compositions in
// lex-decreasing order, then segment multisets, then tail labelings.
template <class F>
void for_each_truncated(int n, int k, int i, F&& f) {
  detail::check_level(n, k, i);
  int a = n - k, nseg = a - 1 - i;
  std::vector<Segment> types;
  for (int h = 0; h <= a - 2; ++h)
    for (int l = k; l >= 1; --l) types.push_back({0, l, k + h, 0});
  for_each_weak_composition(i, a, [&](const Composition& q) {
    if (q.back() != 0) return;
    std::vector<Segment> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (static_cast<int>(cur.size()) == nseg) {
        if (!detail::truncated_fits(n, k, i, q, cur)) return;
        for_each_column_labeling(q, [&](const std::vector<int>& w) {
          f(static_cast<const TruncatedDiagram&>(TruncatedDiagram{n, k, i, q, w, cur}));
        });
        return;
      }
      for (std::size_t ti = from; ti < types.size(); ++ti) {
        Segment s = types[ti];
        s.row = static_cast<int>(cur.size()) + 1;
        cur.push_back(s);
        rec(ti);
        cur.pop_back();
      }
    };
    rec(0);
  });
}

inline std::vector<TruncatedDiagram> enumerate_truncated(int n, int k, int i) {
  std::vector<TruncatedDiagram> out;
  for_each_truncated(n, k, i, [&](const TruncatedDiagram& U) { out.push_back(U); });
  return out;
}

// Segment [l, k+h] slides to a north step at x = h labelled bar(k-l); the
// tail cars of column k+1+x join the same column.
inline MultiLabeledDyckPath theta(const TruncatedDiagram& U) {
  if (!is_valid(U)) throw Error(Errc::MalformedDiagram, "not a truncated diagram");
  int r = U.n - U.k - 1;
  std::vector<std::vector<int>> cols(r);
  for (auto& s : U.gamma) cols[s.right - U.k].push_back(-(U.k - s.left));
  std::size_t pos = 0;
  for (int x = 0; x < r; ++x) {
    std::sort(cols[x].begin(), cols[x].end());
    for (int c = 0; c < U.q[x]; ++c) cols[x].push_back(U.kappa[pos++]);
  }
  MultiLabeledDyckPath M{U.k, r, U.i, Composition(r, 0), {}};
  for (int x = 0; x < r; ++x) {
    M.shape[x] = static_cast<int>(cols[x].size());
    M.labels.insert(M.labels.end(), cols[x].begin(), cols[x].end());
  }
  if (!is_valid(M)) throw Error(Errc::InternalMismatch, "theta left the multi-labeled paths");
  return M;
}

inline TruncatedDiagram theta_inverse(int n, int k, const MultiLabeledDyckPath& M) {
  detail::check_level(n, k, M.i);
  int a = n - k;
  if (M.k != k || M.r != a - 1 || !is_valid(M)) throw Error(Errc::MalformedDiagram, "not a matching multi-labeled path");
  TruncatedDiagram U{n, k, M.i, Composition(a, 0), {}, {}};
  std::size_t pos = 0;
  for (int x = 0; x < M.r; ++x)
    for (int c = 0; c < M.shape[x]; ++c) {
      int L = M.labels[pos++];
      if (L <= 0) {
        U.gamma.push_back({0, k + L, k + x, 0});
      } else {
        ++U.q[x];
        U.kappa.push_back(L);
      }
    }
  detail::renumber(U.gamma);
  if (!is_valid(U)) throw Error(Errc::MalformedDiagram, "path does not give a truncated diagram");
  return U;
}

// h + sum (e_l - e_k), h = (a, ..., a, 2(a-1)-i).
inline Composition k_hull(const TruncatedDiagram& U) {
  int a = U.n - U.k;
  Composition c(U.k, a);
  c[U.k - 1] = 2 * (a - 1) - U.i;
  for (auto& s : U.gamma) {
    ++c[s.left - 1];
    --c[U.k - 1];
  }
  return c;
}

// Weak compositions d of sum(c) into k parts with prefix sums D_j >= C_j for
// j < k, weighted by multinomials.
inline BigCount hull_completions(const Composition& c) {
  long long N = sum_of(c);
  int k = static_cast<int>(c.size());
  auto C = prefix_sums(c);
  BigCount total = 0;
  for_each_weak_composition(N, k, [&](const Composition& d) {
    long long D = 0;
    for (int j = 0; j + 1 < k; ++j) {
      D += d[j];
      if (D < C[j]) return;
    }
    total += multinomial(N, d);
  });
  return total;
}

inline BigCount completions(const TruncatedDiagram& U) {
  if (!is_valid(U)) throw Error(Errc::MalformedDiagram, "not a truncated diagram");
  return hull_completions(k_hull(U));
}

// Oracle: labeled initial parts p such that s = (p, q) clears t and leaves
// room for every segment of Gamma in each of the first k columns.
inline BigCount completions_direct(const TruncatedDiagram& U) {
  if (!is_valid(U)) throw Error(Errc::MalformedDiagram, "not a truncated diagram");
  auto t = shifted_outdegree(caracol_k(U.n, U.k));
  auto T = prefix_sums(t);
  long long N = initial_height(U.n, U.k, U.i);
  BigCount total = 0;
  for_each_weak_composition(N, U.k, [&](const Composition& p) {
    long long S = 0;
    for (int j = 1; j <= U.k; ++j) {
      S += p[j - 1];
      long long cover = 0;
      for (auto& s : U.gamma) cover += s.left <= j;
      if (S - T[j - 1] < cover) return;
    }
    total += multinomial(N, p);
  });
  return total;
}

// ------------------------------------------------------------ cyclic action

// Colour l moves to ((l-1-z) mod k) + 1; the result is re-sorted.
inline TruncatedDiagram cyclic_action(int z, const TruncatedDiagram& U) {
  TruncatedDiagram V = U;
  int k = U.k;
  for (auto& s : V.gamma) s.left = (((s.left - 1 - z) % k) + k) % k + 1;
  detail::renumber(V.gamma);
  return V;
}

// rho = l - 1 per row, rows kept in place.
inline std::vector<int> rho_of(const TruncatedDiagram& U) {
  std::vector<int> r;
  for (auto& s : U.gamma) r.push_back(s.left - 1);
  return r;
}

inline std::vector<int> shift_rho(int z, int k, std::vector<int> rho) {
  for (auto& x : rho) x = (((x - z) % k) + k) % k;
  return rho;
}

inline std::vector<std::vector<TruncatedDiagram>> cyclic_orbits(int n, int k, int i) {
  auto all = enumerate_truncated(n, k, i);
  std::vector<std::vector<TruncatedDiagram>> orbits;
  std::set<std::size_t> done;
  std::map<std::string, std::size_t> index;
  auto key = [](const TruncatedDiagram& U) {
    std::ostringstream os;
    for (int x : U.q) os << x << ',';
    os << '|';
    for (int x : U.kappa) os << x << ',';
    os << '|';
    for (auto& s : U.gamma) os << s.left << ':' << s.right << ',';
    return os.str();
  };
  for (std::size_t u = 0; u < all.size(); ++u) index[key(all[u])] = u;
  for (std::size_t u = 0; u < all.size(); ++u) {
    if (done.count(u)) continue;
    std::vector<TruncatedDiagram> orb;
    for (int z = 0; z < k; ++z) {
      auto V = cyclic_action(z, all[u]);
      auto it = index.find(key(V));
      if (it == index.end()) throw Error(Errc::InternalMismatch, "cyclic action left the set");
      if (done.insert(it->second).second) orb.push_back(V);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

// ------------------------------------------------------------ simplex partition

struct SimplexPart {
  Composition hull;
  bool negative = false;  // hull has a negative entry
  std::vector<Composition> members;
  BigCount total = 0;
};

// d in C(c_j) iff every cyclic window d_j + ... + d_{j+w} (w = 0..k-2) is at
// least the matching window of c_j, c_j = c_0 + e_{k-1} - e_{j-1}.
inline bool in_simplex_part(const Composition& d, const Composition& c, int j) {
  int k = static_cast<int>(c.size());
  long long D = 0, C = 0;
  for (int w = 0; w + 1 < k; ++w) {
    D += d[(j + w) % k];
    C += c[(j + w) % k];
    if (D < C) return false;
  }
  return true;
}

inline std::vector<SimplexPart> simplex_partition(const Composition& c0) {
  int k = static_cast<int>(c0.size());
  if (k < 2) throw Error(Errc::BadParameters, "simplex_partition needs k >= 2");
  for (int x : c0)
    if (x < 0) throw Error(Errc::NegativeHull, "c0 has a negative entry");
  long long N = sum_of(c0);
  std::vector<SimplexPart> parts(k);
  for (int j = 0; j < k; ++j) {
    Composition c = c0;
    if (j > 0) {
      ++c[k - 1];
      --c[j - 1];
    }
    parts[j].hull = c;
    parts[j].negative = std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
  }
  for_each_weak_composition(N, k, [&](const Composition& d) {
    int owner = -1;
    for (int j = 0; j < k; ++j)
      if (in_simplex_part(d, parts[j].hull, j)) {
        if (owner >= 0) throw Error(Errc::InternalMismatch, "simplex parts overlap");
        owner = j;
      }
    if (owner < 0) throw Error(Errc::InternalMismatch, "simplex parts miss a composition");
    parts[owner].members.push_back(d);
    parts[owner].total += multinomial(N, d);
  });
  return parts;
}

// ------------------------------------------------------------ standardized counts

inline BigCount standardized_formula(int n, int k, int i) {
  detail::check_level(n, k, i);
  int a = n - k;
  long long e = 1LL * (k + 1) * a - 3 - i;  // negative only when k = 1
  BigCount kp = e >= 0 ? ipow(k, e) : BigCount(1);
  return kp * k_parking_number(k, a - 1, i);
}

// Sum of completions(U) over the truncated diagrams.
inline BigCount standardized_count(int n, int k, int i) {
  std::map<Composition, BigCount> memo;
  BigCount total = 0;
  for_each_truncated(n, k, i, [&](const TruncatedDiagram& U) {
    auto c = k_hull(U);
    auto it = memo.find(c);
    if (it == memo.end()) it = memo.emplace(c, hull_completions(c)).first;
    total += it->second;
  });
  return total;
}

inline BigCount standardized_count_direct(int n, int k, int i) {
  BigCount total = 0;
  for_each_truncated(n, k, i, [&](const TruncatedDiagram& U) { total += completions_direct(U); });
  return total;
}

// Independent route: standardized labelings of every s with level i at column
// k, times K(s-t, 0).
inline BigCount standardized_count_kostant(int n, int k, int i) {
  detail::check_level(n, k, i);
  auto g = caracol_k(n, k);
  auto t = shifted_outdegree(g);
  int a = n - k;
  long long N = initial_height(n, k, i);
  KostantEvaluator ev(g);
  BigCount total = 0;
  for_each_weak_composition(N, k, [&](const Composition& p) {
    for_each_weak_composition(i, a, [&](const Composition& q) {
      Composition s = p;
      s.insert(s.end(), q.begin(), q.end());
      if (!dominates(s, t)) return;
      total += multinomial(N, p) * multinomial(i, q) * ev.count(detail::shifted_target(s, t));
    });
  });
  return total;
}

// ------------------------------------------------------------ rendering

inline std::string render_text(const TruncatedDiagram& U) {
  std::ostringstream os;
  os << "truncated level-(" << U.k << "," << U.i << ") diagram of Car(" << U.n + 1 << "," << U.k << ")\n";
  os << "  tail q:";
  for (int x : U.q) os << ' ' << x;
  os << "\n  labels:";
  for (int x : U.kappa) os << ' ' << x;
  os << "\n  segments:";
  for (auto& s : U.gamma) os << " [" << s.left << "," << s.right << "]";
  os << "\n  k-hull:";
  for (int x : k_hull(U)) os << ' ' << x;
  os << "\n";
  return os.str();
}

// Columns left to right; '#' marks the reference region, labels sit on the path.
inline std::string render_text(const UnifiedDiagram& U) {
  std::ostringstream os;
  auto S = prefix_sums(U.path.shape);
  auto T = prefix_sums(U.path.reference);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < S.size(); ++j) {
    os << "col " << j + 1 << ": height " << S[j] << " (ref " << T[j] << ")";
    for (int c = 0; c < U.path.shape[j]; ++c, ++pos) {
      os << ' ' << U.sigma[pos];
      if (!U.alpha[j].empty()) os << '/' << U.alpha[j][c];
    }
    os << "\n";
  }
  os << "flow:";
  for (auto x : U.gamma) os << ' ' << x;
  os << "\n";
  return os.str();
}

}  // namespace flowpoly
