#pragma once
// Kostant partition functions and integral flows.
//
// K_G(v) counts nonnegative integer combinations of the edge roots e_i - e_j
// equal to v, with parallel edges counted as distinct roots (so a root of
// multiplicity mu used c times contributes multichoose(mu, c) ways).  That is
// the reading under which the Lidskii formulas hold for multigraphs.
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flowpoly/combinat.hpp"
#include "flowpoly/graph.hpp"

namespace flowpoly {

namespace detail {

inline void check_vector(const DirectedMultigraph& g, const NetFlow& v) {
  if (static_cast<int>(v.size()) != g.num_vertices())
    throw Error(Errc::LengthMismatch, "vector has " + std::to_string(v.size()) +
                                          " entries, graph has " +
                                          std::to_string(g.num_vertices()) + " vertices");
  long long s = 0;
  for (auto x : v) s += x;
  if (s != 0) throw Error(Errc::SumNonzero, "entries sum to " + std::to_string(s));
}

// Necessary condition at vertex i: every residual block i..j must push flow forward.
inline bool forward_feasible(const std::vector<long long>& res, int i, int last) {
  long long acc = 0;
  for (int j = i; j < last; ++j) {
    acc += res[j];
    if (acc < 0) return false;
  }
  return true;
}

}  // namespace detail

class KostantEvaluator {
 public:
  explicit KostantEvaluator(const DirectedMultigraph& g) : g_(g), N_(g.num_vertices()) {
    out_.assign(N_ + 1, {});
    for (auto& e : g.edges()) out_[e.from].push_back({e.to, e.mult});
    memo_.assign(N_ + 1, {});
  }

  BigCount count(const NetFlow& v) {
    detail::check_vector(g_, v);
    std::vector<long long> res(N_ + 1, 0);
    for (int i = 1; i <= N_; ++i) res[i] = v[i - 1];
    return rec(1, res);
  }

  std::size_t memo_size() const {
    std::size_t s = 0;
    for (auto& m : memo_) s += m.size();
    return s;
  }

 private:
  BigCount weight(int mult, long long c) {
    if (mult == 1) return 1;
    return multichoose(mult, c);
  }

  BigCount rec(int i, std::vector<long long>& res) {
    if (i == N_) return res[N_] == 0 ? 1 : 0;
    if (res[i] < 0 || !detail::forward_feasible(res, i, N_)) return 0;
    std::vector<long long> key(res.begin() + i, res.begin() + N_);
    auto it = memo_[i].find(key);
    if (it != memo_[i].end()) return it->second;
    BigCount total = 0;
    const auto& tg = out_[i];
    if (tg.empty()) {
      total = res[i] == 0 ? rec(i + 1, res) : BigCount(0);
    } else {
      distribute(i, 0, res[i], res, BigCount(1), total);
    }
    memo_[i].emplace(std::move(key), total);
    return total;
  }

  void distribute(int i, std::size_t idx, long long left, std::vector<long long>& res,
                  const BigCount& w, BigCount& total) {
    const auto& tg = out_[i];
    auto [to, mult] = tg[idx];
    if (idx + 1 == tg.size()) {
      res[to] += left;
      BigCount sub = rec(i + 1, res);
      if (sub != 0) total += w * weight(mult, left) * sub;
      res[to] -= left;
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      res[to] += c;
      distribute(i, idx + 1, left - c, res, c == 0 ? w : w * weight(mult, c), total);
      res[to] -= c;
    }
  }

  const DirectedMultigraph& g_;
  int N_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::map<std::vector<long long>, BigCount>> memo_;
};

inline BigCount kostant(const DirectedMultigraph& g, const NetFlow& v) {
  KostantEvaluator ev(g);
  return ev.count(v);
}

namespace detail {

// Enumerates nonnegative integer assignments to "slots" (directed pairs)
// whose net flow equals v.  f receives the per-slot values.
template <class F>
class SlotEnumerator {
 public:
  SlotEnumerator(int nv, std::vector<std::pair<int, int>> slots, F& f)
      : N_(nv), slots_(std::move(slots)), f_(f) {
    by_source_.assign(N_ + 1, {});
    for (std::size_t s = 0; s < slots_.size(); ++s) by_source_[slots_[s].first].push_back(s);
    val_.assign(slots_.size(), 0);
  }

  std::uint64_t run(const NetFlow& v) {
    std::vector<long long> res(N_ + 1, 0);
    for (int i = 1; i <= N_; ++i) res[i] = v[i - 1];
    vertex(1, res);
    return count_;
  }

 private:
  void vertex(int i, std::vector<long long>& res) {
    if (i == N_) {
      if (res[N_] == 0) {
        ++count_;
        f_(static_cast<const std::vector<long long>&>(val_));
      }
      return;
    }
    if (res[i] < 0 || !forward_feasible(res, i, N_)) return;
    if (by_source_[i].empty()) {
      if (res[i] == 0) vertex(i + 1, res);
      return;
    }
    spread(i, 0, res[i], res);
  }

  void spread(int i, std::size_t idx, long long left, std::vector<long long>& res) {
    const auto& ss = by_source_[i];
    std::size_t s = ss[idx];
    int to = slots_[s].second;
    if (idx + 1 == ss.size()) {
      val_[s] = left;
      res[to] += left;
      vertex(i + 1, res);
      res[to] -= left;
      val_[s] = 0;
      return;
    }
    for (long long c = left; c >= 0; --c) {
      val_[s] = c;
      res[to] += c;
      spread(i, idx + 1, left - c, res);
      res[to] -= c;
    }
    val_[s] = 0;
  }

  int N_;
  std::vector<std::pair<int, int>> slots_;
  F& f_;
  std::vector<std::vector<std::size_t>> by_source_;
  std::vector<long long> val_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

// Each integral flow with net flow a; the flow vector is indexed like
// g.edge_list() (parallel copies separately).  Returns the number visited.
template <class F>
std::uint64_t for_each_integral_flow(const DirectedMultigraph& g, const NetFlow& a, F&& f) {
  detail::check_vector(g, a);
  detail::SlotEnumerator<F> en(g.num_vertices(), g.edge_list(), f);
  return en.run(a);
}

inline std::vector<std::vector<long long>> integral_flows(const DirectedMultigraph& g,
                                                          const NetFlow& a) {
  std::vector<std::vector<long long>> out;
  for_each_integral_flow(g, a, [&](const std::vector<long long>& fl) { out.push_back(fl); });
  return out;
}

struct VectorPartition {
  std::vector<long long> counts;  // indexed like g.edges(): times each distinct root is used
  BigCount weight;                // prod multichoose(mult, count): its share of K_G
};

// Each multiset of roots summing to v, once.  Parallel edges are merged;
// the weight records how many per-edge combinations collapse onto it.
template <class F>
std::uint64_t for_each_vector_partition(const DirectedMultigraph& g, const NetFlow& v, F&& f) {
  detail::check_vector(g, v);
  std::vector<std::pair<int, int>> slots;
  for (auto& e : g.edges()) slots.emplace_back(e.from, e.to);
  auto wrap = [&](const std::vector<long long>& c) {
    VectorPartition p{c, 1};
    for (std::size_t s = 0; s < c.size(); ++s)
      if (g.edges()[s].mult > 1) p.weight *= multichoose(g.edges()[s].mult, c[s]);
    f(static_cast<const VectorPartition&>(p));
  };
  detail::SlotEnumerator<decltype(wrap)> en(g.num_vertices(), slots, wrap);
  return en.run(v);
}

inline std::vector<VectorPartition> vector_partitions(const DirectedMultigraph& g,
                                                      const NetFlow& v) {
  std::vector<VectorPartition> out;
  for_each_vector_partition(g, v, [&](const VectorPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace flowpoly
