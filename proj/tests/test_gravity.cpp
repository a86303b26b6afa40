#include <gtest/gtest.h>

#include <set>

#include "flowpoly/gravity.hpp"
#include "flowpoly/kostant.hpp"

using namespace flowpoly;

namespace {

GravityDiagram out_diagram(int n, int k, std::vector<std::pair<int, int>> segs) {
  GravityDiagram d{DiagramKind::Out, n, k, n - k, {}};
  for (std::size_t i = 0; i < segs.size(); ++i)
    d.segments.push_back({static_cast<int>(i) + 1, segs[i].first, segs[i].second, 0});
  return d;
}

GravityDiagram in_diagram(int n, int k, std::vector<int> starts) {
  GravityDiagram d{DiagramKind::In, n, k, n - k, {}};
  for (std::size_t r = 0; r < starts.size(); ++r)
    d.segments.push_back({static_cast<int>(r) + 1, starts[r], n, 0});
  return d;
}

}  // namespace

TEST(GravityIn, CountsMatchKostantAndCatalan) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto g = caracol_k(n, k);
      auto ds = enumerate_in_gravity(n, k);
      EXPECT_EQ(BigCount(ds.size()), kostant(g, v_in(g))) << n << "," << k;
      EXPECT_EQ(BigCount(ds.size()), rational_catalan(n - k, k * (n - k) - 1)) << n << "," << k;
      std::set<std::vector<int>> seen;
      for (auto& d : ds) {
        EXPECT_TRUE(is_valid_in(d));
        std::vector<int> st;
        for (auto& s : d.segments) st.push_back(s.left);
        EXPECT_TRUE(seen.insert(st).second);
      }
    }
}

TEST(GravityIn, SmallCounts) {
  EXPECT_EQ(enumerate_in_gravity(5, 2).size(), 7u);   // Cat(3,5)
  EXPECT_EQ(enumerate_in_gravity(5, 1).size(), 5u);   // Cat(4,3)
}

TEST(GravityOut, CountsMatchKostantAndCatalan) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto g = caracol_k(n, k);
      auto ds = enumerate_out_gravity(n, k);
      EXPECT_EQ(BigCount(ds.size()), kostant(g, v_out(g))) << n << "," << k;
      std::set<std::vector<std::pair<int, int>>> seen;
      for (auto& d : ds) {
        EXPECT_TRUE(is_valid_out(d));
        std::vector<std::pair<int, int>> key;
        for (auto& s : d.segments) key.push_back({s.left, s.right});
        EXPECT_TRUE(seen.insert(key).second);
      }
    }
}

TEST(GravityOut, EndpointBoundsHold) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (auto& d : enumerate_out_gravity(n, k))
        for (auto& s : d.segments) {
          EXPECT_LE(out_rp(s, k), s.row * k - 1);
          EXPECT_GE(s.left, 1);
          EXPECT_LE(s.left, k);
          EXPECT_LE(s.right, n - 2);
        }
}

TEST(GravityOut, RejectsOverfullColumn) {
  // Car_7^(2), a = 4: column 4 has a single dot, two segments through it do not fit
  auto d = out_diagram(6, 2, {{2, 2}, {1, 4}, {1, 4}});
  EXPECT_FALSE(is_valid_out(d));
  EXPECT_THROW(psi_out(d), Error);
}

TEST(Psi, PairOfDycksExample) {
  auto out = out_diagram(11, 3, {{3, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 7}, {3, 7}, {1, 7}});
  ASSERT_TRUE(is_valid_out(out));
  EXPECT_EQ(psi_out_subpartition(out), (std::vector<int>{14, 12, 12, 5, 4, 1}));
  Composition want(23, 0);
  for (auto [x, c] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {4, 1}, {5, 1}, {12, 2}, {14, 1}})
    want[x] = c;
  auto p = psi_out(out);
  EXPECT_EQ(p.shape, want);
  EXPECT_EQ(p.reference, rational_shape(8, 23));

  std::vector<int> starts{5, 6, 6, 6, 7};
  for (int r = 0; r < 7; ++r) starts.push_back(8);
  starts.push_back(10);
  starts.push_back(10);
  auto in = in_diagram(11, 3, starts);
  ASSERT_TRUE(is_valid_in(in));
  EXPECT_EQ(psi_in(in).shape, want);
  EXPECT_EQ(psi_in_inverse(11, 3, p), in);
  EXPECT_EQ(psi_out_inverse(11, 3, p), out);
}

TEST(Psi, BijectiveOntoRationalPaths) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto t = fuss_shape(n, k);
      std::set<Composition> all;
      for_each_dominating(t, [&](const Composition& s) { all.insert(s); });
      std::set<Composition> in_img, out_img;
      for (auto& d : enumerate_in_gravity(n, k)) {
        auto p = psi_in(d);
        in_img.insert(p.shape);
        EXPECT_EQ(psi_in_inverse(n, k, p), d);
      }
      for (auto& d : enumerate_out_gravity(n, k)) {
        auto p = psi_out(d);
        out_img.insert(p.shape);
        EXPECT_EQ(psi_out_inverse(n, k, p), d);
      }
      EXPECT_EQ(in_img, all) << n << "," << k;
      EXPECT_EQ(out_img, all) << n << "," << k;
    }
}

TEST(Psi, InverseRejectsForeignPaths) {
  TDyckPath bad{{0, 1, 1, 1, 0}, rational_shape(3, 5)};
  EXPECT_THROW(psi_in_inverse(5, 2, bad), Error);
  TDyckPath wrong_ref{{3, 0}, {2, 1}};
  EXPECT_THROW(psi_out_inverse(5, 2, wrong_ref), Error);
}

TEST(Correspondence, IsPerfectMatching) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto pairs = in_out_correspondence(n, k);
      EXPECT_EQ(BigCount(pairs.size()), rational_catalan(n - k, k * (n - k) - 1));
    }
}

TEST(Correspondence, KOneConjugatesSegmentLengths) {
  // Car_8 example: out lengths (3,2,2,1) pair with in lengths (4,3,1)
  EXPECT_EQ(conjugate_partition({3, 2, 2, 1}), (std::vector<int>{4, 3, 1}));
  bool found = false;
  for (int n = 2; n <= 8; ++n)
    for (auto& pr : in_out_correspondence(n, 1)) {
      std::vector<int> in_len;
      for (auto& s : pr.in.segments) in_len.push_back(n - s.left);
      std::sort(in_len.rbegin(), in_len.rend());
      EXPECT_EQ(conjugate_partition(segment_partition(pr.out)), in_len);
      if (n == 7 && segment_partition(pr.out) == std::vector<int>{3, 2, 2, 1}) {
        found = true;
        EXPECT_EQ(in_len, (std::vector<int>{4, 3, 1}));
      }
    }
  EXPECT_TRUE(found);
}

TEST(Multicaracol, CountsMatchKostant) {
  for (int a = 1; a <= 6; ++a)
    for (int k = 1; k <= 4; ++k) {
      if ((a + k) > 9) continue;
      auto g = multicaracol(a, k);
      auto ds = enumerate_out_gravity_mcar(a, k);
      EXPECT_EQ(BigCount(ds.size()), kostant(g, v_out(g))) << a << "," << k;
      EXPECT_EQ(ds.size(), enumerate_out_gravity(a + k, k).size());
    }
}

TEST(Xi, WorkedExample) {
  auto out = out_diagram(11, 3, {{3, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 7}, {3, 7}, {1, 7}});
  auto m = xi(out);
  std::vector<std::pair<int, int>> got;
  for (auto& s : m.segments) got.push_back({s.color, s.right});
  EXPECT_EQ(got, (std::vector<std::pair<int, int>>{{3, 0}, {2, 0}, {2, 1}, {1, 1}, {3, 4}, {3, 4}, {1, 4}}));
  EXPECT_EQ(xi_inverse(m), out);
}

TEST(Xi, BijectionOnAllDiagrams) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      std::set<std::vector<std::pair<int, int>>> img;
      for (auto& d : enumerate_out_gravity(n, k)) {
        auto m = xi(d);
        EXPECT_EQ(xi_inverse(m), d);
        std::vector<std::pair<int, int>> key;
        for (auto& s : m.segments) key.push_back({s.color, s.right});
        img.insert(key);
      }
      std::set<std::vector<std::pair<int, int>>> all;
      for (auto& m : enumerate_out_gravity_mcar(n - k, k)) {
        std::vector<std::pair<int, int>> key;
        for (auto& s : m.segments) key.push_back({s.color, s.right});
        all.insert(key);
      }
      EXPECT_EQ(img, all);
    }
}

TEST(Render, ShowsSegments) {
  auto d = out_diagram(5, 2, {{2, 2}, {1, 3}});
  ASSERT_TRUE(is_valid_out(d));
  auto txt = render_text(d);
  EXPECT_NE(txt.find("o--o--o"), std::string::npos) << txt;
  auto in = enumerate_in_gravity(5, 2).front();
  EXPECT_FALSE(render_text(in).empty());
  auto m = xi(d);
  EXPECT_NE(render_text(m).find("1--1"), std::string::npos) << render_text(m);
}

TEST(GravityOut, EmbeddedEndpointBounds) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (auto& d : enumerate_out_gravity(n, k)) {
        int prev = -1;
        for (auto& s : d.segments) {
          if (k > 1) {
            EXPECT_EQ(out_lp(s, k) % (k - 1), 0);
          }
          EXPECT_GE(out_rp(s, k), prev);  // right endpoints move weakly right
          prev = out_rp(s, k);
        }
      }
}
