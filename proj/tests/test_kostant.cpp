#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "flowpoly/kostant.hpp"

using namespace flowpoly;

namespace {

// Tries every assignment of 0..bound to every edge instance.
std::uint64_t brute_kostant(const DirectedMultigraph& g, const NetFlow& v, int bound) {
  auto el = g.edge_list();
  std::vector<long long> f(el.size(), 0);
  std::uint64_t cnt = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == el.size()) {
      NetFlow net(g.num_vertices(), 0);
      for (std::size_t q = 0; q < el.size(); ++q) {
        net[el[q].first - 1] += f[q];
        net[el[q].second - 1] -= f[q];
      }
      if (net == v) ++cnt;
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      f[e] = x;
      rec(e + 1);
    }
    f[e] = 0;
  };
  rec(0);
  return cnt;
}

std::vector<DirectedMultigraph> small_graphs() {
  return {caracol_k(3, 1), caracol_k(3, 2), pitman_stanley(4), complete_graph(3),
          multicaracol(2, 2), from_edge_list(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}}),
          from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {1, 3}})};
}

// Sum-zero vectors with entries in [-lim, lim] on nv coordinates.
std::vector<NetFlow> sum_zero_vectors(int nv, int lim) {
  std::vector<NetFlow> out;
  NetFlow v(nv, 0);
  std::function<void(int, long long)> rec = [&](int j, long long s) {
    if (j == nv - 1) {
      if (-s >= -lim && -s <= lim) {
        v[j] = -s;
        out.push_back(v);
      }
      return;
    }
    for (int x = -lim; x <= lim; ++x) {
      v[j] = x;
      rec(j + 1, s + x);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST(Kostant, ZeroVector) {
  for (auto& g : small_graphs()) EXPECT_EQ(kostant(g, NetFlow(g.num_vertices(), 0)), 1);
}

TEST(Kostant, SumNonzeroRejected) {
  auto g = caracol_k(3, 1);
  try {
    kostant(g, {1, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SumNonzero);
  }
}

TEST(Kostant, SmallCounts) {
  EXPECT_EQ(kostant(caracol_k(5, 1), v_out(caracol_k(5, 1))), 5);
  EXPECT_EQ(kostant(caracol_k(5, 2), v_out(caracol_k(5, 2))), 7);
  EXPECT_EQ(kostant(caracol_k(5, 1), v_in(caracol_k(5, 1))), 5);
}

TEST(Kostant, MatchesBruteForceOnSmallGraphs) {
  for (auto& g : small_graphs())
    for (auto& v : sum_zero_vectors(g.num_vertices(), 2))
      ASSERT_EQ(kostant(g, v), BigCount(brute_kostant(g, v, 4)));
}

TEST(Kostant, EdgeOrderDoesNotMatter) {
  auto g = caracol_k(5, 2);
  auto el = g.edge_list();
  std::reverse(el.begin(), el.end());
  std::rotate(el.begin(), el.begin() + 3, el.end());
  auto h = from_edge_list(g.num_vertices(), el);
  for (auto& v : {v_out(g), v_in(g), NetFlow{2, 1, 0, 0, 1, -4}}) EXPECT_EQ(kostant(g, v), kostant(h, v));
}

TEST(Kostant, OutEqualsInForCaracol) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      auto g = caracol_k(n, k);
      EXPECT_EQ(kostant(g, v_out(g)), kostant(g, v_in(g))) << n << "," << k;
    }
}

TEST(IntegralFlows, CountEqualsKostant) {
  std::vector<DirectedMultigraph> gs = small_graphs();
  gs.push_back(caracol_k(5, 1));
  gs.push_back(caracol_k(5, 2));
  gs.push_back(multicaracol(3, 2));
  for (auto& g : gs) {
    ASSERT_LE(g.m(), 16);
    NetFlow a(g.num_vertices(), 0);
    for (int total = 0; total <= 4; ++total) {
      a.assign(g.num_vertices(), 0);
      a.front() = total;
      a.back() = -total;
      EXPECT_EQ(BigCount(integral_flows(g, a).size()), kostant(g, a));
      a.assign(g.num_vertices(), 0);
      for (int j = 0; j < total && j < g.n(); ++j) a[j] = 1;
      a.back() = -std::min(total, g.n());
      EXPECT_EQ(BigCount(integral_flows(g, a).size()), kostant(g, a));
    }
  }
  auto ps = pitman_stanley(4);
  EXPECT_EQ(BigCount(integral_flows(ps, {1, 1, 1, -3}).size()), kostant(ps, {1, 1, 1, -3}));
}

TEST(IntegralFlows, ZeroFlowIsUnique) {
  auto g = caracol_k(5, 2);
  auto fl = integral_flows(g, NetFlow(6, 0));
  ASSERT_EQ(fl.size(), 1u);
  for (auto x : fl[0]) EXPECT_EQ(x, 0);
}

TEST(IntegralFlows, FlowsAreDistinctAndConserve) {
  auto g = multicaracol(2, 3);
  NetFlow a{3, 1, 0, -4};
  std::set<std::vector<long long>> seen;
  auto el = g.edge_list();
  for_each_integral_flow(g, a, [&](const std::vector<long long>& f) {
    EXPECT_TRUE(seen.insert(f).second);
    NetFlow net(g.num_vertices(), 0);
    for (std::size_t q = 0; q < el.size(); ++q) {
      EXPECT_GE(f[q], 0);
      net[el[q].first - 1] += f[q];
      net[el[q].second - 1] -= f[q];
    }
    EXPECT_EQ(net, a);
  });
  EXPECT_EQ(BigCount(seen.size()), kostant(g, a));
}

TEST(VectorPartitions, SmallCountsAndWeights) {
  auto g2 = caracol_k(5, 2);
  EXPECT_EQ(vector_partitions(g2, v_out(g2)).size(), 7u);
  auto g1 = caracol_k(5, 1);
  EXPECT_EQ(vector_partitions(g1, v_in(g1)).size(), 5u);
  EXPECT_EQ(vector_partitions(g1, NetFlow(6, 0)).size(), 1u);
  // multigraph: the merged classes carry the parallel-copy multiplicity
  auto m = multicaracol(3, 2);
  BigCount w = 0;
  std::size_t cls = 0;
  for_each_vector_partition(m, v_out(m), [&](const VectorPartition& p) {
    w += p.weight;
    ++cls;
  });
  EXPECT_EQ(w, kostant(m, v_out(m)));
  EXPECT_LT(cls, 7u);
}
