#ifndef NEWBASIS_TESTS_ORACLES_HPP
#define NEWBASIS_TESTS_ORACLES_HPP

// Independent re-implementations used as test oracles. Nothing here calls
// into the library except for the final conversions at the boundary.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "newbasis/intervals.hpp"

namespace oracle {

using Iv = std::pair<int, int>;
using Family = std::vector<Iv>; // sorted

inline Family family_of(const newbasis::IntervalSet& b)
{
  Family f;
  for (const auto& iv : b.items()) f.emplace_back(iv.a, iv.b);
  std::sort(f.begin(), f.end());
  return f;
}

inline int len(const Iv& i) { return i.second - i.first + 1; }
inline bool prec(const Iv& i, const Iv& j) { return j.first < i.first && i.second < j.second; }
inline bool spade(const Iv& i, const Iv& j) { return j.first - i.second >= 2 || i.first - j.second >= 2; }

inline bool compatible(const Iv& i, const Iv& j) { return i == j || spade(i, j) || prec(i, j) || prec(j, i); }

// union of the odd-length members inside [a,b]
inline std::set<int> xcal(const Family& f, int a, int b)
{
  std::set<int> out;
  for (const auto& iv : f)
    if (len(iv) % 2 == 1 && a <= iv.first && iv.second <= b)
      for (int k = iv.first; k <= iv.second; ++k) out.insert(k);
  return out;
}

// {a, a+2, ..., b} inside xcal; requires b - a even
inline bool covers_discrete(const Family& f, int a, int b)
{
  auto x = xcal(f, a, b);
  for (int k = a; k <= b; k += 2)
    if (!x.count(k)) return false;
  return true;
}

inline bool p0(const Family& f)
{
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!compatible(f[i], f[j])) return false;
  return true;
}

inline bool p1(const Family& f)
{
  for (const auto& iv : f)
    if (len(iv) % 2 == 1 && iv.second - iv.first >= 2 && !covers_discrete(f, iv.first + 1, iv.second - 1))
      return false;
  return true;
}

inline bool p2(const Family& f, int d)
{
  Family even;
  for (const auto& iv : f)
    if (len(iv) % 2 == 0) even.push_back(iv);
  int k = static_cast<int>(even.size());
  // the even members must form a chain [h1,h2k] > [h2,h2k-1] > ...
  std::sort(even.begin(), even.end(), [](const Iv& x, const Iv& y) { return len(x) > len(y); });
  std::vector<int> h(2 * k + 2);
  h[0] = 0;
  h[2 * k + 1] = d + 1;
  for (int j = 1; j <= k; ++j) {
    h[j] = even[j - 1].first;
    h[2 * k + 1 - j] = even[j - 1].second;
  }
  for (int j = 0; j <= 2 * k; ++j)
    if (h[j] >= h[j + 1]) return false;
  for (int j = 0; j <= 2 * k + 1; ++j)
    if ((h[j] - j) % 2 != 0) return false;
  if (k == 0) return true;
  for (int j = 0; j <= 2 * k; ++j) {
    if (j == k || h[j + 1] < h[j] + 3) continue;
    if (j < k) {
      if (!covers_discrete(f, h[j] + 1, h[j + 1] - 2)) return false;
    } else {
      if (!covers_discrete(f, h[j] + 2, h[j + 1] - 1)) return false;
    }
  }
  return true;
}

// every B in R_D satisfying P0, P1, P2; backtracking over P0-compatible families
inline std::set<Family> brute_force_S(int d)
{
  std::vector<Iv> all;
  for (int a = 1; a <= d; ++a)
    for (int b = a; b <= d; ++b) all.emplace_back(a, b);
  std::set<Family> out;
  Family cur;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == all.size()) {
      if (p1(cur) && p2(cur, d)) {
        Family s = cur;
        std::sort(s.begin(), s.end());
        out.insert(s);
      }
      return;
    }
    rec(pos + 1);
    for (const auto& iv : cur)
      if (!compatible(iv, all[pos])) return;
    cur.push_back(all[pos]);
    rec(pos + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

inline long binomial(long n, long k)
{
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------- F2 side
// vectors are bit masks, bit i-1 for e_i

inline std::uint64_t mask(int d) { return d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1; }
inline std::uint64_t e(int i) { return std::uint64_t{1} << (i - 1); }

inline std::uint64_t e_interval(int a, int b)
{
  std::uint64_t x = 0;
  for (int k = a; k <= b; ++k) x |= e(k);
  return x;
}

inline int form(int d, std::uint64_t x, std::uint64_t y)
{
  int n = 0;
  for (int i = 1; i <= d; ++i)
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j <= d && (x & e(i)) && (y & e(j))) ++n;
  return n & 1;
}

// maximal runs of ones, which are exactly the non-touching decomposition
inline std::vector<Iv> runs(int d, std::uint64_t x)
{
  std::vector<Iv> out;
  for (int i = 1; i <= d;) {
    if (!(x & e(i))) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= d && (x & e(j + 1))) ++j;
    out.emplace_back(i, j);
    i = j + 1;
  }
  return out;
}

inline int u(int d, std::uint64_t x)
{
  int r = 0;
  for (const auto& [a, b] : runs(d, x)) {
    if (a % 2 == 0 && b % 2 == 1) ++r;
    if (a % 2 == 1 && b % 2 == 0) --r;
  }
  return r;
}

inline int utilde(int d, std::uint64_t x)
{
  int v = u(d, x);
  return v >= 0 ? 2 * v : -2 * v - 1;
}

// T_i : V' -> V, V' of dimension d - 2
inline std::uint64_t T(int d, int i, std::uint64_t xp)
{
  std::uint64_t x = 0;
  for (int j = 1; j <= d - 2; ++j) {
    if (!(xp & e(j))) continue;
    std::uint64_t img;
    if (i == 1)
      img = e(j + 2);
    else if (i == d)
      img = e(j);
    else if (j <= i - 2)
      img = e(j);
    else if (j == i - 1)
      img = e(i - 1) | e(i) | e(i + 1);
    else
      img = e(j + 2);
    x ^= img;
  }
  return x;
}

inline bool in_V(int d, int s, std::uint64_t x)
{
  int t = s % 2 == 0 ? s / 2 : (s + 1) / 2;
  auto r = runs(d, x);
  if (static_cast<int>(r.size()) != t) return false;
  for (const auto& [a, b] : r)
    if ((a - s) % 2 != 0 || (b - s - 1) % 2 != 0) return false;
  return true;
}

// component id of every vector under x ~ x + e_i when (x, e_i) = 0
inline std::vector<int> components(int d)
{
  std::size_t n = std::size_t{1} << d;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (std::uint64_t x = 0; x < n; ++x)
    for (int i = 1; i <= d; ++i)
      if (!form(d, x, e(i))) parent[find(static_cast<int>(x))] = find(static_cast<int>(x ^ e(i)));
  std::vector<int> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = find(static_cast<int>(x));
  return out;
}

// all members of the span of gens
inline std::set<std::uint64_t> span(const std::vector<std::uint64_t>& gens)
{
  std::set<std::uint64_t> s{0};
  for (auto g : gens) {
    std::set<std::uint64_t> t = s;
    for (auto v : s) t.insert(v ^ g);
    s = std::move(t);
  }
  return s;
}

inline std::vector<std::uint64_t> generators(const Family& f)
{
  std::vector<std::uint64_t> g;
  for (const auto& iv : f) g.push_back(e_interval(iv.first, iv.second));
  return g;
}

// a linear order on 0..n-1 compatible with "j before i whenever rel(i, j)" exists
inline bool acyclic(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& rel)
{
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rel(i, j)) ++indeg[i];
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n && pick == n; ++i)
      if (!done[i] && indeg[i] == 0) pick = i;
    if (pick == n) return false;
    done[pick] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pick && rel(i, pick)) --indeg[i];
  }
  return true;
}

} // namespace oracle

#endif
