#pragma once
// Exact integer combinatorics: coefficients, compositions, dominance order,
// rational Catalan and k-parking numbers.
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flowpoly/error.hpp"

namespace flowpoly {

// Signed on purpose: generalized binomials with negative top go through it.
// Every count exposed by the library is nonnegative.
using BigCount = boost::multiprecision::cpp_int;
using Composition = std::vector<int>;

inline std::string to_string(const BigCount& x) { return x.str(); }

inline BigCount ipow(BigCount base, long long e) {
  if (e < 0) throw Error(Errc::BadParameters, "negative exponent");
  BigCount r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// C(n,k) with arbitrary integer top: n(n-1)...(n-k+1)/k!.
inline BigCount gbinomial(const BigCount& n, long long k) {
  if (k < 0) return 0;
  BigCount r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return r;
}

inline BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0) throw Error(Errc::BadParameters, "binomial expects nonnegative arguments");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  return gbinomial(BigCount(n), k);
}

// Number of k-multisets from n symbols.
inline BigCount multichoose(long long n, long long k) {
  if (n < 0 || k < 0) throw Error(Errc::BadParameters, "multichoose expects nonnegative arguments");
  if (k == 0) return 1;
  if (n == 0) return 0;
  return binomial(n + k - 1, k);
}

// Same, extended to any integer n via C(n+k-1, k); can be negative.
inline BigCount gmultichoose(long long n, long long k) {
  if (k < 0) return 0;
  return gbinomial(BigCount(n + k - 1), k);
}

inline long long sum_of(const Composition& c) {
  return std::accumulate(c.begin(), c.end(), 0LL);
}

inline BigCount multinomial(long long n, const Composition& parts) {
  if (sum_of(parts) != n)
    throw Error(Errc::SumMismatch, "multinomial parts sum to " + std::to_string(sum_of(parts)) +
                                       ", expected " + std::to_string(n));
  BigCount r = 1;
  long long acc = 0;
  for (int p : parts) {
    if (p < 0) throw Error(Errc::BadParameters, "negative part in multinomial");
    acc += p;
    r *= binomial(acc, p);
  }
  return r;
}

// (1/(a+b)) C(a+b, a), insisting on exactness. b = 0 is admitted (Cat(1,0) = 1).
inline BigCount rational_catalan(long long a, long long b) {
  if (a < 1 || b < 0) throw Error(Errc::BadParameters, "rational_catalan needs a >= 1, b >= 0");
  BigCount c = binomial(a + b, a);
  // the three equivalent expressions, compared cross-multiplied
  if (b >= 1 && (c * b != binomial(a + b - 1, a) * (a + b) ||
                 c * a != binomial(a + b - 1, b) * (a + b)))
    throw Error(Errc::InternalMismatch, "rational Catalan expressions disagree");
  if (c % (a + b) != 0)
    throw Error(Errc::NonIntegral, "Cat(" + std::to_string(a) + "," + std::to_string(b) +
                                       ") is not an integer");
  return c / (a + b);
}

// T_k(r,i) = (r+1)^(i-1) * multichoose(k(r+1), r-i).
inline BigCount k_parking_number(long long k, long long r, long long i) {
  if (k < 1 || r < 0 || i < 0 || i > r)
    throw Error(Errc::BadParameters, "k_parking_number needs k >= 1 and 0 <= i <= r");
  BigCount m = multichoose(k * (r + 1), r - i);
  if (i >= 1) return ipow(BigCount(r + 1), i - 1) * m;
  if (m % (r + 1) != 0) throw Error(Errc::InternalMismatch, "T_k(r,0) not integral");
  return m / (r + 1);
}

inline bool is_log_concave(const std::vector<BigCount>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  return true;
}

inline std::vector<long long> prefix_sums(const Composition& c) {
  std::vector<long long> p(c.size());
  long long acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j) p[j] = (acc += c[j]);
  return p;
}

inline bool dominates(const Composition& s, const Composition& t) {
  if (s.size() != t.size()) throw Error(Errc::LengthMismatch, "dominates: lengths differ");
  if (sum_of(s) != sum_of(t)) throw Error(Errc::SumMismatch, "dominates: sums differ");
  long long ps = 0, pt = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    ps += s[j];
    pt += t[j];
    if (ps < pt) return false;
  }
  return true;
}

// All s with the same length and sum as t whose prefix sums dominate t's,
// in lexicographically decreasing order, starting from (|t|, 0, ..., 0).
class DominatingCompositions {
 public:
  explicit DominatingCompositions(Composition t) : t_(std::move(t)), T_(prefix_sums(t_)) {
    total_ = sum_of(t_);
  }

  bool next(Composition& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      cur_.assign(t_.size(), 0);
      if (t_.empty()) {
        done_ = true;
        out = cur_;
        return true;
      }
      cur_[0] = static_cast<int>(total_);
      out = cur_;
      return true;
    }
    long long P = 0;
    std::vector<long long> pre(cur_.size());
    for (std::size_t j = 0; j < cur_.size(); ++j) pre[j] = (P += cur_[j]);
    for (std::size_t jj = cur_.size() - 1; jj-- > 0;) {
      if (cur_[jj] > 0 && pre[jj] - 1 >= T_[jj]) {
        --cur_[jj];
        cur_[jj + 1] = static_cast<int>(total_ - (pre[jj] - 1));
        for (std::size_t q = jj + 2; q < cur_.size(); ++q) cur_[q] = 0;
        out = cur_;
        return true;
      }
    }
    done_ = true;
    return false;
  }

 private:
  Composition t_;
  std::vector<long long> T_;
  long long total_ = 0;
  Composition cur_;
  bool started_ = false, done_ = false;
};

template <class F>
void for_each_dominating(const Composition& t, F&& f) {
  DominatingCompositions gen(t);
  Composition s;
  while (gen.next(s)) f(static_cast<const Composition&>(s));
}

inline std::vector<Composition> dominating_compositions(const Composition& t) {
  std::vector<Composition> out;
  for_each_dominating(t, [&](const Composition& s) { out.push_back(s); });
  return out;
}

// Weak compositions of N into k parts, lexicographically decreasing.
template <class F>
void for_each_weak_composition(long long N, int k, F&& f) {
  if (k <= 0) {
    if (N == 0) f(Composition{});
    return;
  }
  Composition t(k, 0);
  t.back() = static_cast<int>(N);
  for_each_dominating(t, std::forward<F>(f));
}

inline std::vector<Composition> weak_compositions(long long N, int k) {
  std::vector<Composition> out;
  for_each_weak_composition(N, k, [&](const Composition& s) { out.push_back(s); });
  return out;
}

}  // namespace flowpoly
