#pragma once
// Lattice paths: t-Dyck paths, rational (a,b)-Dyck shapes, labeled paths,
// k-multi-labeled Dyck paths and the circular parking process.
#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "flowpoly/combinat.hpp"

namespace flowpoly {

// A weak composition s (north steps per column) dominating a reference t.
struct TDyckPath {
  Composition shape;
  Composition reference;
  bool operator==(const TDyckPath&) const = default;
};

inline TDyckPath make_t_dyck(Composition s, Composition t) {
  if (!dominates(s, t)) throw Error(Errc::MalformedDiagram, "path does not dominate its reference");
  return {std::move(s), std::move(t)};
}

// Squares between the path and the reference region.  Defined for completeness.
inline long long area(const TDyckPath& p) {
  auto S = prefix_sums(p.shape);
  auto T = prefix_sums(p.reference);
  long long a = 0;
  for (std::size_t j = 0; j < S.size(); ++j) a += S[j] - T[j];
  return a;
}

template <class F>
void for_each_t_dyck(const Composition& t, F&& f) {
  for_each_dominating(t, [&](const Composition& s) { f(TDyckPath{s, t}); });
}

inline std::vector<TDyckPath> enumerate_t_dyck(const Composition& t) {
  std::vector<TDyckPath> out;
  for_each_t_dyck(t, [&](const TDyckPath& p) { out.push_back(p); });
  return out;
}

// Reference composition (length b, sum a) whose t-Dyck paths are the paths
// from (0,0) to (b,a) weakly above the diagonal: t_j = ceil(aj/b) - ceil(a(j-1)/b).
// b < a is allowed (needed for k = 1); b must be positive.
inline Composition rational_shape(int a, int b) {
  if (a < 1 || b < 1) throw Error(Errc::BadParameters, "rational_shape needs a, b >= 1");
  if (std::gcd(a, b) != 1) throw Error(Errc::NotCoprime, "rational_shape needs gcd(a,b) = 1");
  auto ceil_div = [](long long p, long long q) { return (p + q - 1) / q; };
  Composition t(b);
  for (int j = 1; j <= b; ++j)
    t[j - 1] = static_cast<int>(ceil_div(1LL * a * j, b) - ceil_div(1LL * a * (j - 1), b));
  return t;
}

// Labels are read along north steps bottom-to-top, left-to-right.
struct LabeledTDyckPath {
  TDyckPath path;
  std::vector<int> labels;
  bool operator==(const LabeledTDyckPath&) const = default;
};

// Ordered set partitions of {1..q} into blocks of the given sizes, each
// block increasing; f receives the concatenated word.
template <class F>
void for_each_column_labeling(const Composition& sizes, F&& f) {
  int q = static_cast<int>(sum_of(sizes));
  std::vector<int> col_of(q + 1, -1), fill(sizes.size(), 0);
  std::function<void(int)> rec = [&](int label) {
    if (label > q) {
      std::vector<std::vector<int>> cols(sizes.size());
      for (int l = 1; l <= q; ++l) cols[col_of[l]].push_back(l);
      std::vector<int> word;
      for (auto& c : cols) word.insert(word.end(), c.begin(), c.end());
      f(static_cast<const std::vector<int>&>(word));
      return;
    }
    for (std::size_t c = 0; c < sizes.size(); ++c)
      if (fill[c] < sizes[c]) {
        ++fill[c];
        col_of[label] = static_cast<int>(c);
        rec(label + 1);
        --fill[c];
      }
  };
  rec(1);
}

template <class F>
void for_each_labeled(const Composition& t, F&& f) {
  for_each_dominating(t, [&](const Composition& s) {
    for_each_column_labeling(s, [&](const std::vector<int>& w) { f(LabeledTDyckPath{{s, t}, w}); });
  });
}

inline std::vector<LabeledTDyckPath> enumerate_labeled(const Composition& t) {
  std::vector<LabeledTDyckPath> out;
  for_each_labeled(t, [&](const LabeledTDyckPath& p) { out.push_back(p); });
  return out;
}

inline BigCount count_labeled(const Composition& t) {
  BigCount c = 0;
  long long q = sum_of(t);
  for_each_dominating(t, [&](const Composition& s) { c += multinomial(q, s); });
  return c;
}

// Labels: barred j is stored as -j (so bar(0) is 0), cars are 1..i.
// shape[x] is the number of north steps at x, x = 0..r-1.
struct MultiLabeledDyckPath {
  int k = 1, r = 0, i = 0;
  Composition shape;
  std::vector<int> labels;
  bool operator==(const MultiLabeledDyckPath&) const = default;
};

inline bool is_valid(const MultiLabeledDyckPath& M) {
  if (static_cast<int>(M.shape.size()) != M.r || static_cast<int>(M.labels.size()) != M.r) return false;
  long long S = 0;
  for (int x = 0; x < M.r; ++x) {
    if (M.shape[x] < 0) return false;
    S += M.shape[x];
    if (S < x + 1) return false;
  }
  if (S != M.r) return false;
  std::vector<int> seen(M.i + 1, 0);
  int barred = 0;
  for (int L : M.labels) {
    if (L <= 0) {
      if (L < -(M.k - 1)) return false;
      ++barred;
    } else {
      if (L > M.i || seen[L]++) return false;
    }
  }
  if (barred != M.r - M.i) return false;
  std::size_t pos = 0;
  for (int x = 0; x < M.r; ++x) {
    for (int c = 1; c < M.shape[x]; ++c)
      if (M.labels[pos + c - 1] > M.labels[pos + c]) return false;
    pos += M.shape[x];
  }
  return true;
}

template <class F>
void for_each_multilabeled(int k, int r, int i, F&& f) {
  if (k < 1 || r < 0 || i < 0 || i > r) throw Error(Errc::BadParameters, "need k >= 1, 0 <= i <= r");
  Composition stair(r, 1);
  for_each_dominating(stair, [&](const Composition& s) {
    // cars per column
    for_each_weak_composition(i, r, [&](const Composition& q) {
      for (int x = 0; x < r; ++x)
        if (q[x] > s[x]) return;
      // barred multisets per column, as nondecreasing runs over -(k-1)..0
      std::vector<std::vector<int>> bars(r);
      std::function<void(int)> col = [&](int x) {
        if (x == r) {
          for_each_column_labeling(q, [&](const std::vector<int>& carword) {
            MultiLabeledDyckPath M{k, r, i, s, {}};
            std::size_t cp = 0;
            for (int y = 0; y < r; ++y) {
              M.labels.insert(M.labels.end(), bars[y].begin(), bars[y].end());
              for (int c = 0; c < q[y]; ++c) M.labels.push_back(carword[cp++]);
            }
            f(static_cast<const MultiLabeledDyckPath&>(M));
          });
          return;
        }
        int b = s[x] - q[x];
        std::vector<int> cur;
        std::function<void(int, int)> pick = [&](int left, int lo) {
          if (left == 0) {
            bars[x] = cur;
            col(x + 1);
            return;
          }
          for (int L = lo; L <= 0; ++L) {
            cur.push_back(L);
            pick(left - 1, L);
            cur.pop_back();
          }
        };
        pick(b, -(k - 1));
      };
      col(0);
    });
  });
}

inline std::vector<MultiLabeledDyckPath> enumerate_multilabeled(int k, int r, int i) {
  std::vector<MultiLabeledDyckPath> out;
  for_each_multilabeled(k, r, i, [&](const MultiLabeledDyckPath& M) { out.push_back(M); });
  return out;
}

// motorcycle_prefs[g] is the (sorted) multiset of preferred spaces of the
// model bar(k-1-g) group; groups arrive in that order, then the cars in order.
struct ParkingPreference {
  std::vector<std::vector<int>> motorcycle_prefs;
  std::vector<int> car_prefs;
  bool operator==(const ParkingPreference&) const = default;
};

// Occupant of spaces 1..r+1: -j for a model bar(j) motorcycle, c for car c,
// nullopt for the single empty space.
inline std::vector<std::optional<int>> circular_park(int k, int r, const ParkingPreference& pp) {
  if (static_cast<int>(pp.motorcycle_prefs.size()) != k)
    throw Error(Errc::BadParameters, "expected one preference multiset per motorcycle model");
  std::size_t total = pp.car_prefs.size();
  for (auto& g : pp.motorcycle_prefs) total += g.size();
  if (static_cast<int>(total) != r) throw Error(Errc::BadParameters, "vehicle count must equal r");
  std::vector<std::optional<int>> spaces(r + 1);
  auto park = [&](int pref, int who) {
    if (pref < 1 || pref > r + 1) throw Error(Errc::BadParameters, "preference out of range");
    int s = pref - 1;
    while (spaces[s]) s = (s + 1) % (r + 1);
    spaces[s] = who;
  };
  for (int g = 0; g < k; ++g) {
    auto prefs = pp.motorcycle_prefs[g];
    std::sort(prefs.begin(), prefs.end());
    for (int p : prefs) park(p, -(k - 1 - g));
  }
  for (std::size_t c = 0; c < pp.car_prefs.size(); ++c) park(pp.car_prefs[c], static_cast<int>(c) + 1);
  return spaces;
}

inline ParkingPreference shift_preference(const ParkingPreference& pp, int z, int r) {
  auto sh = [&](int p) { return ((p - 1 + z) % (r + 1) + (r + 1)) % (r + 1) + 1; };
  ParkingPreference out = pp;
  for (auto& g : out.motorcycle_prefs) {
    for (auto& p : g) p = sh(p);
    std::sort(g.begin(), g.end());
  }
  for (auto& p : out.car_prefs) p = sh(p);
  return out;
}

// A north step at x with label L becomes a preference for space x+1.
inline ParkingPreference preference_of(const MultiLabeledDyckPath& M) {
  ParkingPreference pp;
  pp.motorcycle_prefs.assign(M.k, {});
  pp.car_prefs.assign(M.i, 0);
  std::size_t pos = 0;
  for (int x = 0; x < M.r; ++x)
    for (int c = 0; c < M.shape[x]; ++c) {
      int L = M.labels[pos++];
      if (L <= 0) pp.motorcycle_prefs[M.k - 1 + L].push_back(x + 1);
      else pp.car_prefs[L - 1] = x + 1;
    }
  return pp;
}

// Inverse of preference_of; requires the preferences to form a Dyck path.
inline MultiLabeledDyckPath multilabeled_of(int k, int r, const ParkingPreference& pp) {
  int i = static_cast<int>(pp.car_prefs.size());
  std::vector<std::vector<int>> cols(r);
  auto put = [&](int p, int L) {
    if (p < 1 || p > r) throw Error(Errc::MalformedDiagram, "preference for space r+1 has no column");
    cols[p - 1].push_back(L);
  };
  for (int g = 0; g < k; ++g)
    for (int p : pp.motorcycle_prefs[g]) put(p, -(k - 1 - g));
  for (int c = 0; c < i; ++c) put(pp.car_prefs[c], c + 1);
  MultiLabeledDyckPath M{k, r, i, Composition(r, 0), {}};
  for (int x = 0; x < r; ++x) {
    std::sort(cols[x].begin(), cols[x].end());
    M.shape[x] = static_cast<int>(cols[x].size());
    M.labels.insert(M.labels.end(), cols[x].begin(), cols[x].end());
  }
  if (!is_valid(M)) throw Error(Errc::MalformedDiagram, "preferences do not form a Dyck path");
  return M;
}

}  // namespace flowpoly
