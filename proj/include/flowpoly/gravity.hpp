#pragma once
// Canonical gravity diagrams for Car_{n+1}^{(k)} (in- and out-degree) and for
// the multicaracol graph, with the bijections to rational Dyck paths.
//
// Conventions (a = n-k, b = ka-1):
//  * in-degree: column j = k+1..n carries (j-k)k-1 dots; nontrivial segments
//    are [j,n], j = k+1..n-1.  Rows are numbered from the top and longer
//    segments sit higher, so starts are nondecreasing down the rows.
//  * out-degree: a-1 (possibly trivial) segments [l,r] with 1 <= l <= k <= r,
//    rows numbered from the bottom, sorted by (r, r-l).
//  * multicaracol out-degree: a-1 coloured segments [0,h] in the usual labels,
//    colour c in 1..k, sorted by h with ties putting the lower colour higher.
#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "flowpoly/graph.hpp"
#include "flowpoly/paths.hpp"

namespace flowpoly {

enum class DiagramKind { In, Out, McarOut };

inline const char* kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::In: return "in";
    case DiagramKind::Out: return "out";
    case DiagramKind::McarOut: return "mcar-out";
  }
  return "?";
}

struct Segment {
  int row = 0, left = 0, right = 0;
  int color = 0;  // multicaracol only
  bool operator==(const Segment&) const = default;
};

struct GravityDiagram {
  DiagramKind kind = DiagramKind::Out;
  int n = 0, k = 0, a = 0;  // multicaracol: n = a + k is kept for convenience
  std::vector<Segment> segments;
  bool operator==(const GravityDiagram&) const = default;
};

namespace detail {

inline void check_nk(int n, int k) {
  if (k < 1 || n <= k) throw Error(Errc::BadParameters, "need n > k >= 1");
}

// Dot counts per column 1..n, read off the simple-root coordinates of the target vector.
inline std::vector<long long> column_dots(const NetFlow& v) { return to_simple_roots(v); }

}  // namespace detail

// Reference shape of the rational (a, ka-1) paths; the degenerate b = 0 case
// (n = 2, k = 1) is represented by the one-column shape (1).
inline Composition fuss_shape(int n, int k) {
  int a = n - k, b = k * a - 1;
  if (b == 0) return Composition{1};
  return rational_shape(a, b);
}

// ---------------------------------------------------------------- in-degree

inline bool is_valid_in(const GravityDiagram& d) {
  if (d.kind != DiagramKind::In) return false;
  auto dots = detail::column_dots(v_in(caracol_k(d.n, d.k)));
  std::vector<long long> cover(d.n + 2, 0);
  int prev = d.k + 1;
  for (std::size_t r = 0; r < d.segments.size(); ++r) {
    auto& s = d.segments[r];
    if (s.row != static_cast<int>(r) + 1 || s.right != d.n || s.left <= d.k || s.left >= d.n) return false;
    if (s.left < prev) return false;
    prev = s.left;
    for (int c = s.left; c <= d.n; ++c) ++cover[c];
  }
  for (int c = d.k + 1; c <= d.n; ++c)
    if (cover[c] > dots[c - 1]) return false;
  return true;
}

template <class F>
void for_each_in_gravity(int n, int k, F&& f) {
  detail::check_nk(n, k);
  auto dots = detail::column_dots(v_in(caracol_k(n, k)));
  std::vector<int> starts;
  // choose how many segments start at j, for j = k+1..n-1
  std::function<void(int)> rec = [&](int j) {
    if (j >= n) {
      GravityDiagram d{DiagramKind::In, n, k, n - k, {}};
      for (std::size_t r = 0; r < starts.size(); ++r)
        d.segments.push_back({static_cast<int>(r) + 1, starts[r], n, 0});
      f(static_cast<const GravityDiagram&>(d));
      return;
    }
    std::size_t base = starts.size();
    for (;;) {
      // all segments so far cover column j
      if (static_cast<long long>(starts.size()) > dots[j - 1]) break;
      rec(j + 1);
      starts.push_back(j);
    }
    starts.resize(base);
  };
  rec(k + 1);
}

inline std::vector<GravityDiagram> enumerate_in_gravity(int n, int k) {
  std::vector<GravityDiagram> out;
  for_each_in_gravity(n, k, [&](const GravityDiagram& d) { out.push_back(d); });
  return out;
}

inline TDyckPath psi_in(const GravityDiagram& d) {
  if (!is_valid_in(d)) throw Error(Errc::MalformedDiagram, "not a canonical in-degree diagram");
  int a = d.n - d.k;
  Composition t = fuss_shape(d.n, d.k);
  int b = static_cast<int>(t.size());
  if (static_cast<int>(d.segments.size()) > b) throw Error(Errc::MalformedDiagram, "too many rows");
  Composition s(b, 0);
  int prev = 0;
  for (int r = 0; r < b; ++r) {
    int S = r < static_cast<int>(d.segments.size()) ? d.segments[r].left - d.k : a;
    s[r] = S - prev;
    prev = S;
  }
  return make_t_dyck(s, t);
}

inline GravityDiagram psi_in_inverse(int n, int k, const TDyckPath& p) {
  detail::check_nk(n, k);
  int a = n - k;
  if (p.reference != fuss_shape(n, k)) throw Error(Errc::MalformedDiagram, "wrong reference shape");
  if (!dominates(p.shape, p.reference)) throw Error(Errc::MalformedDiagram, "not a Dyck path");
  GravityDiagram d{DiagramKind::In, n, k, a, {}};
  long long S = 0;
  for (std::size_t r = 0; r < p.shape.size(); ++r) {
    S += p.shape[r];
    if (S >= a) break;
    d.segments.push_back({static_cast<int>(r) + 1, static_cast<int>(S) + k, n, 0});
  }
  if (!is_valid_in(d)) throw Error(Errc::MalformedDiagram, "path does not give a valid diagram");
  return d;
}

// --------------------------------------------------------------- out-degree

namespace detail {

inline bool out_less(const Segment& x, const Segment& y) {
  if (x.right != y.right) return x.right < y.right;
  return x.right - x.left < y.right - y.left;
}

// Check segment count, bounds, order and dot capacity against v_out.
inline bool out_fits(int n, int k, const std::vector<Segment>& segs) {
  int a = n - k;
  if (static_cast<int>(segs.size()) != a - 1) return false;
  auto dots = column_dots(v_out(caracol_k(n, k)));
  std::vector<long long> cover(n + 1, 0);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& s = segs[i];
    if (s.row != static_cast<int>(i) + 1) return false;
    if (s.left < 1 || s.left > k || s.right < k || s.right > n - 2) return false;
    if (i > 0 && out_less(s, segs[i - 1])) return false;
    for (int c = s.left; c <= s.right; ++c) ++cover[c];
  }
  for (int c = 1; c <= n; ++c)
    if (cover[c] > dots[c - 1]) return false;
  return true;
}

}  // namespace detail

inline bool is_valid_out(const GravityDiagram& d) {
  return d.kind == DiagramKind::Out && detail::out_fits(d.n, d.k, d.segments);
}

template <class F>
void for_each_out_gravity(int n, int k, F&& f) {
  detail::check_nk(n, k);
  int a = n - k;
  // segment types in convention order
  std::vector<Segment> types;
  for (int r = k; r <= n - 2; ++r)
    for (int l = k; l >= 1; --l) types.push_back({0, l, r, 0});
  std::vector<Segment> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == a - 1) {
      if (detail::out_fits(n, k, cur)) f(GravityDiagram{DiagramKind::Out, n, k, a, cur});
      return;
    }
    for (std::size_t ti = from; ti < types.size(); ++ti) {
      Segment s = types[ti];
      s.row = static_cast<int>(cur.size()) + 1;
      // rows 1..i can only reach column k+i-1 (fewer dots further right)
      if (s.right > k + s.row - 1) break;
      cur.push_back(s);
      rec(ti);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::vector<GravityDiagram> enumerate_out_gravity(int n, int k) {
  std::vector<GravityDiagram> out;
  for_each_out_gravity(n, k, [&](const GravityDiagram& d) { out.push_back(d); });
  return out;
}

// Column of the embedded segment's left endpoint in the Dyck-path picture, and
// its right endpoint: lp = (r-k)(k-1), rp = lp + (r-l).
inline int out_lp(const Segment& s, int k) { return (s.right - k) * (k - 1); }
inline int out_rp(const Segment& s, int k) { return out_lp(s, k) + (s.right - s.left); }

inline TDyckPath psi_out(const GravityDiagram& d) {
  if (!is_valid_out(d)) throw Error(Errc::MalformedDiagram, "not a canonical out-degree diagram");
  Composition t = fuss_shape(d.n, d.k);
  Composition s(t.size(), 0);
  s[0] += 1;  // row 1 of the path
  for (auto& seg : d.segments) {
    int x = out_rp(seg, d.k);
    if (x >= static_cast<int>(s.size())) throw Error(Errc::MalformedDiagram, "segment leaves the grid");
    s[x] += 1;
  }
  return make_t_dyck(s, t);
}

inline GravityDiagram psi_out_inverse(int n, int k, const TDyckPath& p) {
  detail::check_nk(n, k);
  int a = n - k;
  if (p.reference != fuss_shape(n, k)) throw Error(Errc::MalformedDiagram, "wrong reference shape");
  if (!dominates(p.shape, p.reference)) throw Error(Errc::MalformedDiagram, "not a Dyck path");
  std::vector<int> xs;
  for (std::size_t x = 0; x < p.shape.size(); ++x)
    for (int c = 0; c < p.shape[x]; ++c) xs.push_back(static_cast<int>(x));
  if (xs.empty() || xs[0] != 0) throw Error(Errc::MalformedDiagram, "first north step must be at x = 0");
  GravityDiagram d{DiagramKind::Out, n, k, a, {}};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    int rp = xs[i];
    int j = rp / k;  // jk <= rp <= (j+1)k - 1
    int r = k + j;
    int len = rp - j * (k - 1);
    d.segments.push_back({static_cast<int>(i), r - len, r, 0});
  }
  if (!is_valid_out(d)) throw Error(Errc::MalformedDiagram, "path does not give a valid diagram");
  return d;
}

// Right endpoints of the embedded segments, largest first, zeros dropped.
inline std::vector<int> psi_out_subpartition(const GravityDiagram& d) {
  std::vector<int> v;
  for (auto& s : d.segments)
    if (int x = out_rp(s, d.k); x > 0) v.push_back(x);
  std::sort(v.rbegin(), v.rend());
  return v;
}

// Horizontal lengths right - left of the nontrivial segments, largest first.
inline std::vector<int> segment_partition(const GravityDiagram& d) {
  std::vector<int> v;
  for (auto& s : d.segments)
    if (s.right > s.left) v.push_back(s.right - s.left);
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline std::vector<int> conjugate_partition(const std::vector<int>& lambda) {
  std::vector<int> c;
  if (lambda.empty()) return c;
  for (int j = 1; j <= lambda.front(); ++j) {
    int cnt = 0;
    for (int x : lambda) cnt += x >= j;
    c.push_back(cnt);
  }
  return c;
}

struct InOutPair {
  GravityDiagram out, in;
  TDyckPath path;
};

// Pairs each out-degree diagram with the in-degree diagram of the same path.
inline std::vector<InOutPair> in_out_correspondence(int n, int k) {
  std::map<Composition, GravityDiagram> by_path;
  for_each_in_gravity(n, k, [&](const GravityDiagram& d) {
    if (!by_path.emplace(psi_in(d).shape, d).second)
      throw Error(Errc::InternalMismatch, "psi_in is not injective");
  });
  std::vector<InOutPair> pairs;
  std::map<Composition, int> used;
  for_each_out_gravity(n, k, [&](const GravityDiagram& d) {
    auto p = psi_out(d);
    auto it = by_path.find(p.shape);
    if (it == by_path.end() || used[p.shape]++)
      throw Error(Errc::InternalMismatch, "in/out correspondence is not a matching");
    pairs.push_back({d, it->second, p});
  });
  if (pairs.size() != by_path.size()) throw Error(Errc::InternalMismatch, "in/out counts differ");
  return pairs;
}

// ------------------------------------------------------------ multicaracol

namespace detail {

inline bool mcar_less(const Segment& x, const Segment& y) {
  if (x.right != y.right) return x.right < y.right;
  return x.color > y.color;
}

inline bool mcar_fits(int a, int k, const std::vector<Segment>& segs) {
  if (static_cast<int>(segs.size()) != a - 1) return false;
  // internal column c+1 is alpha_c in the usual labels
  auto dots = column_dots(v_out(multicaracol(a, k)));
  std::vector<long long> cover(a + 3, 0);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& s = segs[i];
    if (s.row != static_cast<int>(i) + 1 || s.left != 0 || s.right < 0 || s.right > a - 2) return false;
    if (s.color < 1 || s.color > k) return false;
    if (i > 0 && mcar_less(s, segs[i - 1])) return false;
    for (int c = 0; c <= s.right; ++c) ++cover[c + 1];
  }
  for (int c = 1; c <= a + 1; ++c)
    if (cover[c] > dots[c - 1]) return false;
  return true;
}

}  // namespace detail

inline bool is_valid_mcar_out(const GravityDiagram& d) {
  return d.kind == DiagramKind::McarOut && detail::mcar_fits(d.a, d.k, d.segments);
}

template <class F>
void for_each_out_gravity_mcar(int a, int k, F&& f) {
  if (a < 1 || k < 1) throw Error(Errc::BadParameters, "need a, k >= 1");
  std::vector<Segment> types;
  for (int h = 0; h <= a - 2; ++h)
    for (int c = k; c >= 1; --c) types.push_back({0, 0, h, c});
  std::vector<Segment> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == a - 1) {
      if (detail::mcar_fits(a, k, cur)) f(GravityDiagram{DiagramKind::McarOut, a + k, k, a, cur});
      return;
    }
    for (std::size_t ti = from; ti < types.size(); ++ti) {
      Segment s = types[ti];
      s.row = static_cast<int>(cur.size()) + 1;
      if (s.right > s.row - 1) break;
      cur.push_back(s);
      rec(ti);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::vector<GravityDiagram> enumerate_out_gravity_mcar(int a, int k) {
  std::vector<GravityDiagram> out;
  for_each_out_gravity_mcar(a, k, [&](const GravityDiagram& d) { out.push_back(d); });
  return out;
}

// Project the first k columns onto one: a segment starting in column l gets colour l.
inline GravityDiagram xi(const GravityDiagram& d) {
  if (!is_valid_out(d)) throw Error(Errc::MalformedDiagram, "xi expects a caracol out-degree diagram");
  GravityDiagram m{DiagramKind::McarOut, d.n, d.k, d.n - d.k, {}};
  for (auto& s : d.segments) m.segments.push_back({s.row, 0, s.right - d.k, s.left});
  if (!is_valid_mcar_out(m)) throw Error(Errc::InternalMismatch, "xi produced an invalid diagram");
  return m;
}

inline GravityDiagram xi_inverse(const GravityDiagram& m) {
  if (!is_valid_mcar_out(m)) throw Error(Errc::MalformedDiagram, "xi_inverse expects a multicaracol diagram");
  int n = m.a + m.k;
  GravityDiagram d{DiagramKind::Out, n, m.k, m.a, {}};
  for (auto& s : m.segments) d.segments.push_back({s.row, s.color, m.k + s.right, 0});
  if (!is_valid_out(d)) throw Error(Errc::InternalMismatch, "xi_inverse produced an invalid diagram");
  return d;
}

// ---------------------------------------------------------------- rendering

namespace detail {

inline std::string rstrip_lines(const std::string& s) {
  std::string out, line;
  std::istringstream is(s);
  while (std::getline(is, line)) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

// Dots as 'o', segments as 'o--o'.  Multicaracol segments print their colour.
inline std::string render_text(const GravityDiagram& d) {
  std::ostringstream os;
  auto cell = [&](bool dot, bool joined, char mark) {
    os << (dot ? mark : ' ') << (joined ? "--" : "  ");
  };
  if (d.kind == DiagramKind::In) {
    auto dots = detail::column_dots(v_in(caracol_k(d.n, d.k)));
    long long rows = dots[d.n - 1];
    os << "in-degree Car(" << d.n + 1 << "," << d.k << "), columns " << d.k + 1 << ".." << d.n << "\n";
    for (long long r = 1; r <= rows; ++r) {
      const Segment* seg = r <= static_cast<long long>(d.segments.size()) ? &d.segments[r - 1] : nullptr;
      for (int c = d.k + 1; c <= d.n; ++c) {
        bool on = seg && c >= seg->left && c <= seg->right;
        cell(dots[c - 1] >= r, on && c < seg->right, 'o');
      }
      os << "\n";
    }
    return detail::rstrip_lines(os.str());
  }
  bool mc = d.kind == DiagramKind::McarOut;
  int first = mc ? 0 : 1;
  os << (mc ? "out-degree MCar(" : "out-degree Car(") << (mc ? d.a + 2 : d.n + 1) << "," << d.k
     << "), rows bottom-up 1.." << d.a - 1 << "\n";
  for (int i = d.a - 1; i >= 1; --i) {
    const Segment& s = d.segments[i - 1];
    int last = mc ? i - 1 : d.k + i - 1;  // trapezoidal array
    for (int c = first; c <= last; ++c) {
      bool on = c >= s.left && c <= s.right;
      char mark = mc && on ? static_cast<char>('0' + s.color) : 'o';
      cell(true, on && c < s.right, mark);
    }
    os << "\n";
  }
  return detail::rstrip_lines(os.str());
}

}  // namespace flowpoly
