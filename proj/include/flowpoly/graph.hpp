#pragma once
// Directed acyclic multigraphs on 1..n+1 with edges oriented small-to-large,
// the graph families used throughout, degree vectors and target vectors.
#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flowpoly/combinat.hpp"
#include "flowpoly/error.hpp"

namespace flowpoly {

using NetFlow = std::vector<long long>;

struct Edge {
  int from = 0, to = 0, mult = 1;
  bool operator==(const Edge&) const = default;
};

struct GraphFamily {
  enum class Kind { Custom, Caracol, Multicaracol, PitmanStanley, Complete };
  Kind kind = Kind::Custom;
  int n = 0, k = 0, a = 0;  // whichever apply
  bool operator==(const GraphFamily&) const = default;
};

class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;

  // Validates orientation, degree conditions and connectivity.
  DirectedMultigraph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                     GraphFamily family = {})
      : DirectedMultigraph(num_vertices, edges, family, true) {}

  static DirectedMultigraph unchecked(int num_vertices,
                                      const std::vector<std::pair<int, int>>& edges) {
    return DirectedMultigraph(num_vertices, edges, {}, false);
  }

  int num_vertices() const { return nv_; }
  int n() const { return nv_ - 1; }
  long long m() const {
    long long s = 0;
    for (auto& e : edges_) s += e.mult;
    return s;
  }
  // Distinct edges, sorted by (from, to), with multiplicities.
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge instances, parallel copies listed separately, same order.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (auto& e : edges_)
      for (int c = 0; c < e.mult; ++c) out.emplace_back(e.from, e.to);
    return out;
  }
  int outdegree(int v) const {
    int d = 0;
    for (auto& e : edges_)
      if (e.from == v) d += e.mult;
    return d;
  }
  int indegree(int v) const {
    int d = 0;
    for (auto& e : edges_)
      if (e.to == v) d += e.mult;
    return d;
  }
  const GraphFamily& family() const { return family_; }
  void set_family(GraphFamily f) { family_ = f; }

  bool operator==(const DirectedMultigraph& o) const { return nv_ == o.nv_ && edges_ == o.edges_; }

 private:
  DirectedMultigraph(int nv, const std::vector<std::pair<int, int>>& edges, GraphFamily family,
                     bool check)
      : nv_(nv), family_(family) {
    std::map<std::pair<int, int>, int> mult;
    for (auto [i, j] : edges) {
      if (check && (i < 1 || j > nv || i >= j))
        throw Error(Errc::InvalidGraph, "condition (c): edge (" + std::to_string(i) + "," +
                                            std::to_string(j) +
                                            ") must satisfy 1 <= i < j <= " + std::to_string(nv));
      ++mult[{i, j}];
    }
    for (auto& [ij, c] : mult) edges_.push_back({ij.first, ij.second, c});
    if (!check) return;
    if (nv < 2) throw Error(Errc::InvalidGraph, "need at least two vertices");
    for (int v = 1; v < nv; ++v)
      if (outdegree(v) == 0)
        throw Error(Errc::InvalidGraph,
                    "condition (a): vertex " + std::to_string(v) + " has out-degree 0");
    for (int v = 2; v <= nv; ++v)
      if (indegree(v) == 0)
        throw Error(Errc::InvalidGraph,
                    "condition (b): vertex " + std::to_string(v) + " has in-degree 0");
    std::vector<int> parent(nv + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto& e : edges_) parent[find(e.from)] = find(e.to);
    for (int v = 2; v <= nv; ++v)
      if (find(v) != find(1)) throw Error(Errc::InvalidGraph, "graph is not connected");
  }

  int nv_ = 0;
  std::vector<Edge> edges_;
  GraphFamily family_;
};

inline DirectedMultigraph from_edge_list(int num_vertices,
                                         const std::vector<std::pair<int, int>>& edges) {
  return DirectedMultigraph(num_vertices, edges);
}

// Car_{n+1}^{(k)}.
inline DirectedMultigraph caracol_k(int n, int k) {
  if (k < 1 || n <= k)
    throw Error(Errc::BadParameters, "caracol needs n > k >= 1 (got n=" + std::to_string(n) +
                                         ", k=" + std::to_string(k) + ")");
  std::vector<std::pair<int, int>> set;
  auto add = [&](int i, int j) {
    if (std::find(set.begin(), set.end(), std::make_pair(i, j)) == set.end()) set.emplace_back(i, j);
  };
  for (int i = 1; i <= k; ++i) {
    add(i, i + 1);
    for (int j = k + 1; j <= n; ++j) add(i, j);
  }
  for (int i = k + 1; i <= n; ++i) {
    add(i, i + 1);
    add(i, n + 1);
  }
  GraphFamily f{GraphFamily::Kind::Caracol, n, k, n - k};
  DirectedMultigraph g(n + 1, set, f);
  long long expect = 1LL * (k + 1) * (n - k) + n - 2;
  if (g.m() != expect) throw Error(Errc::InternalMismatch, "caracol edge count");
  return g;
}

// PS_n on vertices 1..n.
inline DirectedMultigraph pitman_stanley(int n) {
  if (n < 2) throw Error(Errc::BadParameters, "pitman_stanley needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n - 2; ++i) e.emplace_back(i, i + 1);
  for (int i = 1; i <= n - 1; ++i) e.emplace_back(i, n);
  return DirectedMultigraph(n, e, {GraphFamily::Kind::PitmanStanley, n, 0, 0});
}

// K_{n+1}.
inline DirectedMultigraph complete_graph(int n) {
  if (n < 1) throw Error(Errc::BadParameters, "complete_graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) e.emplace_back(i, j);
  return DirectedMultigraph(n + 1, e, {GraphFamily::Kind::Complete, n, 0, 0});
}

// PS_{a+1} plus a source joined by k parallel edges to each of 1..a.
// The source (vertex 0 in the usual labeling) is stored as 1 and everything shifts up by one.
inline DirectedMultigraph multicaracol(int a, int k) {
  if (a < 1 || k < 1) throw Error(Errc::BadParameters, "multicaracol needs a >= 1, k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= a; ++i)
    for (int c = 0; c < k; ++c) e.emplace_back(1, i + 1);
  for (int i = 1; i <= a - 1; ++i) e.emplace_back(i + 1, i + 2);
  for (int i = 1; i <= a; ++i) e.emplace_back(i + 1, a + 2);
  DirectedMultigraph g(a + 2, e, {GraphFamily::Kind::Multicaracol, a + 1, k, a});
  if (g.m() != 1LL * (k + 2) * a - 1) throw Error(Errc::InternalMismatch, "multicaracol edge count");
  return g;
}

inline Composition shifted_outdegree(const DirectedMultigraph& g) {
  Composition t(g.n());
  for (int i = 1; i <= g.n(); ++i) t[i - 1] = g.outdegree(i) - 1;
  return t;
}

// u_2..u_{n+1}.
inline Composition shifted_indegree(const DirectedMultigraph& g) {
  Composition u(g.n());
  for (int i = 2; i <= g.n() + 1; ++i) u[i - 2] = g.indegree(i) - 1;
  return u;
}

inline NetFlow v_out(const DirectedMultigraph& g) {
  auto t = shifted_outdegree(g);
  long long mn = g.m() - g.n();
  NetFlow v(g.n() + 1, 0);
  v[0] = mn - t[0];
  for (int i = 1; i < g.n(); ++i) v[i] = -t[i];
  return v;
}

inline NetFlow v_in(const DirectedMultigraph& g) {
  auto u = shifted_indegree(g);
  long long mn = g.m() - g.n();
  NetFlow v(g.n() + 1, 0);
  for (int i = 2; i <= g.n() + 1; ++i) v[i - 1] = u[i - 2];
  v[g.n()] -= mn;
  return v;
}

// Coefficients c_j of v = sum c_j alpha_j (alpha_j = e_j - e_{j+1}), j = 1..n.
inline std::vector<long long> to_simple_roots(const NetFlow& v) {
  std::vector<long long> c(v.empty() ? 0 : v.size() - 1);
  long long acc = 0;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) c[j] = (acc += v[j]);
  return c;
}

inline NetFlow from_simple_roots(const std::vector<long long>& c) {
  NetFlow v(c.size() + 1, 0);
  long long prev = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    v[j] = c[j] - prev;
    prev = c[j];
  }
  v[c.size()] = -prev;
  return v;
}

// Induced sub-multigraph on lo..hi, relabeled to 1..hi-lo+1.
inline DirectedMultigraph restrict(const DirectedMultigraph& g, int lo, int hi) {
  if (lo < 1 || hi > g.num_vertices() || lo > hi)
    throw Error(Errc::BadParameters, "restrict: bad vertex range");
  std::vector<std::pair<int, int>> e;
  for (auto& ed : g.edges())
    if (ed.from >= lo && ed.to <= hi)
      for (int c = 0; c < ed.mult; ++c) e.emplace_back(ed.from - lo + 1, ed.to - lo + 1);
  auto r = DirectedMultigraph::unchecked(hi - lo + 1, e);
  if (lo == 1 && hi == g.num_vertices()) r.set_family(g.family());
  return r;
}

inline std::string describe(const GraphFamily& f) {
  switch (f.kind) {
    case GraphFamily::Kind::Caracol:
      return "caracol:n=" + std::to_string(f.n) + ",k=" + std::to_string(f.k);
    case GraphFamily::Kind::Multicaracol:
      return "mcar:a=" + std::to_string(f.a) + ",k=" + std::to_string(f.k);
    case GraphFamily::Kind::PitmanStanley: return "ps:n=" + std::to_string(f.n);
    case GraphFamily::Kind::Complete: return "complete:n=" + std::to_string(f.n);
    case GraphFamily::Kind::Custom: return "edges";
  }
  return "edges";
}

}  // namespace flowpoly
